#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "solidangle/solidangle.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Library failures caused by the caller's input map to the usage exit code.
int report(sa_status status)
{
    std::cerr << "error: " << sa_last_error() << "\n";
    return status == SA_ERR_INTERNAL ? exit_failed : exit_usage;
}

class OwnedString {
public:
    ~OwnedString() { sa_string_free(p_); }
    char** out() { return &p_; }
    std::string str() const { return p_ ? p_ : ""; }

private:
    char* p_ = nullptr;
};

class OwnedAngle {
public:
    ~OwnedAngle() { sa_angle_free(p_); }
    sa_angle** out() { return &p_; }
    const sa_angle* get() const { return p_; }

private:
    sa_angle* p_ = nullptr;
};

class OwnedPolygon {
public:
    ~OwnedPolygon() { sa_polygon_free(p_); }
    sa_polygon** out() { return &p_; }
    const sa_polygon* get() const { return p_; }

private:
    sa_polygon* p_ = nullptr;
};

std::string format_float(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int print_angle(const OwnedAngle& a, bool float_only)
{
    double v = 0;
    if (sa_status s = sa_angle_to_double(a.get(), &v); s != SA_OK)
        return report(s);
    if (!float_only) {
        OwnedString text;
        if (sa_status s = sa_angle_str(a.get(), text.out()); s != SA_OK)
            return report(s);
        std::cout << text.str() << "\n";
    }
    std::cout << format_float(v) << "\n";
    return exit_ok;
}

int print_string(sa_status status, const OwnedString& s)
{
    if (status != SA_OK)
        return report(status);
    std::cout << s.str();
    if (s.str().empty() || s.str().back() != '\n')
        std::cout << "\n";
    return exit_ok;
}

int write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

struct Options {
    std::string h, k, t, y, x, file, quantity, t_min, t_max, out, target = "a1", suite = "all";
    bool star = false, fast = false, float_only = false;
    long steps = 0;
    double c = 6;
    std::vector<double> eps;
    std::vector<long> matrix{2, -3, 1, 0};
    std::vector<long> xi{1, 0};
    std::vector<std::string> shift{"0", "0"};
    std::vector<int> grids{256, 512, 1024, 2048};
};

int run_dedekind(const Options& o)
{
    OwnedString s;
    const sa_status st = sa_dedekind(o.h.c_str(), o.k.c_str(), o.y.empty() ? nullptr : o.y.c_str(),
                                     o.x.empty() ? nullptr : o.x.c_str(), o.star, o.fast, s.out());
    return print_string(st, s);
}

int run_triangle(const Options& o)
{
    if (o.quantity == "A") {
        OwnedAngle a;
        if (sa_status s = sa_triangle_A(o.h.c_str(), o.k.c_str(), o.t.c_str(), a.out()); s != SA_OK)
            return report(s);
        return print_angle(a, o.float_only);
    }
    OwnedString s;
    if (o.quantity == "L")
        return print_string(sa_triangle_L(o.h.c_str(), o.k.c_str(), o.t.c_str(), s.out()), s);
    return print_string(sa_triangle_coeffs(o.h.c_str(), o.k.c_str(), o.t.c_str(), s.out()), s);
}

int run_polygon(const Options& o, bool oracle)
{
    OwnedPolygon p;
    if (sa_status s = sa_polygon_read_file(o.file.c_str(), p.out()); s != SA_OK)
        return report(s);
    if (o.quantity == "A") {
        OwnedAngle a;
        const sa_status s = oracle ? sa_oracle_A(p.get(), o.t.c_str(), a.out())
                                   : sa_polygon_A(p.get(), o.t.c_str(), a.out());
        if (s != SA_OK)
            return report(s);
        return print_angle(a, o.float_only);
    }
    OwnedString s;
    const sa_status st = oracle ? sa_oracle_L(p.get(), o.t.c_str(), s.out())
                                : sa_polygon_L(p.get(), o.t.c_str(), s.out());
    return print_string(st, s);
}

int run_sweep(const Options& o)
{
    OwnedString s;
    if (sa_status st = sa_sweep_csv(o.h.c_str(), o.k.c_str(), o.t_min.c_str(), o.t_max.c_str(), o.steps,
                                    s.out());
        st != SA_OK)
        return report(st);
    return write_text(o.out, s.str());
}

int run_spectral(const Options& o)
{
    OwnedString s;
    sa_status st;
    if (o.target == "twisted-transform") {
        st = sa_twisted_csv(o.matrix.data(), o.xi.data(), o.shift[0].c_str(), o.shift[1].c_str(),
                            o.grids.data(), o.grids.size(), s.out());
    } else {
        if (o.h.empty() || o.k.empty() || o.t.empty()) {
            std::cerr << "error: --h, --k and --t are required for target " << o.target << "\n";
            return exit_usage;
        }
        st = sa_spectral_csv(o.target.c_str(), o.h.c_str(), o.k.c_str(), o.t.c_str(),
                             o.eps.empty() ? nullptr : o.eps.data(), o.eps.size(), o.c, s.out());
    }
    if (st != SA_OK)
        return report(st);
    return write_text(o.out, s.str());
}

int run_verify(const Options& o)
{
    OwnedString s;
    int passed = 0;
    if (sa_status st = sa_verify(o.suite.c_str(), s.out(), &passed); st != SA_OK)
        return report(st);
    std::cout << s.str();
    return passed ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solid-angle and Ehrhart sums of rational polygons"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Options o;

    auto* dedekind = app.add_subcommand("dedekind", "Dedekind-Rademacher sum s(h,k;y,x)");
    dedekind->add_option("--h", o.h, "h")->required();
    dedekind->add_option("--k", o.k, "k")->required();
    dedekind->add_option("--y", o.y, "shift y (rational)");
    dedekind->add_option("--x", o.x, "shift x (rational)");
    dedekind->add_flag("--star", o.star, "use the B1* sawtooth");
    dedekind->add_flag("--fast", o.fast, "reciprocity algorithm (classical sums only)");

    auto* triangle = app.add_subcommand("triangle", "Sums over the right triangle (0,0),(h,0),(0,k)");
    triangle->add_option("quantity", o.quantity, "A, L or coeffs")
        ->required()
        ->check(CLI::IsMember({"A", "L", "coeffs"}));
    triangle->add_option("--h", o.h, "h")->required();
    triangle->add_option("--k", o.k, "k")->required();
    triangle->add_option("--t", o.t, "dilation (rational)")->required();
    triangle->add_flag("--float", o.float_only, "decimal output only");

    auto* polygon = app.add_subcommand("polygon", "Sums over a rational polygon");
    auto* oracle = app.add_subcommand("oracle", "Brute-force sums over a rational polygon");
    for (CLI::App* sub : {polygon, oracle}) {
        sub->add_option("quantity", o.quantity, "A or L")->required()->check(CLI::IsMember({"A", "L"}));
        sub->add_option("--file", o.file, "polygon file")->required();
        sub->add_option("--t", o.t, "dilation (rational)")->required();
        sub->add_flag("--float", o.float_only, "decimal output only");
    }

    auto* sweep = app.add_subcommand("sweep", "CSV of A and L over equally spaced rational t");
    sweep->add_option("--h", o.h, "h")->required();
    sweep->add_option("--k", o.k, "k")->required();
    sweep->add_option("--t-min", o.t_min, "first t (rational, > 0)")->required();
    sweep->add_option("--t-max", o.t_max, "last t (rational)")->required();
    sweep->add_option("--steps", o.steps, "number of intervals")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--out", o.out, "output CSV path (default: standard output)");

    auto* spectral = app.add_subcommand("spectral", "Convergence table of a damped Fourier sum");
    spectral->add_option("--target", o.target, "a1, b1, b2, b3, c3-sum, c6-sum or twisted-transform")
        ->check(CLI::IsMember({"a1", "b1", "b2", "b3", "c3-sum", "c6-sum", "twisted-transform"}));
    spectral->add_option("--h", o.h, "h");
    spectral->add_option("--k", o.k, "k");
    spectral->add_option("--t", o.t, "dilation (rational)");
    spectral->add_option("--eps-list", o.eps, "decreasing epsilons, comma separated")->delimiter(',');
    spectral->add_option("--c", o.c, "truncation radius multiplier")->capture_default_str();
    spectral->add_option("--matrix", o.matrix, "twisted transform: m,n,p,q")->delimiter(',')->expected(4);
    spectral->add_option("--xi", o.xi, "twisted transform: frequency a,b")->delimiter(',')->expected(2);
    spectral->add_option("--shift", o.shift, "twisted transform: shift x,y")->delimiter(',')->expected(2);
    spectral->add_option("--grids", o.grids, "twisted transform: even grid sizes")->delimiter(',');
    spectral->add_option("--out", o.out, "output CSV path (default: standard output)");

    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", o.suite, "reciprocity, pick, oracle, knuth, spectral or all")
        ->check(CLI::IsMember({"reciprocity", "pick", "oracle", "knuth", "spectral", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (*dedekind)
        return run_dedekind(o);
    if (*triangle)
        return run_triangle(o);
    if (*polygon)
        return run_polygon(o, false);
    if (*oracle)
        return run_polygon(o, true);
    if (*sweep)
        return run_sweep(o);
    if (*spectral)
        return run_spectral(o);
    return run_verify(o);
}
