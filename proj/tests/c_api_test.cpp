#include "solidangle/solidangle.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    sa_string_free(s);
    return out;
}

std::string angle_text(sa_angle* a)
{
    char* s = nullptr;
    EXPECT_EQ(sa_angle_str(a, &s), SA_OK);
    return take(s);
}

TEST(CApiTest, Dedekind)
{
    char* s = nullptr;
    ASSERT_EQ(sa_dedekind("2", "3", nullptr, nullptr, 0, 0, &s), SA_OK);
    EXPECT_EQ(take(s), "-1/18");
    ASSERT_EQ(sa_dedekind("2", "3", nullptr, nullptr, 0, 1, &s), SA_OK);
    EXPECT_EQ(take(s), "-1/18");
    ASSERT_EQ(sa_dedekind("1", "1", "0", "0", 1, 0, &s), SA_OK);
    EXPECT_EQ(take(s), "1/4");
    EXPECT_EQ(sa_dedekind("2", "4", nullptr, nullptr, 0, 0, &s), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_dedekind("2", "3", "1/2", nullptr, 0, 1, &s), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_dedekind("2.5", "3", nullptr, nullptr, 0, 0, &s), SA_ERR_PARSE);
    EXPECT_EQ(sa_dedekind("1/2", "3", nullptr, nullptr, 0, 0, &s), SA_ERR_PARSE);
    EXPECT_NE(std::string(sa_last_error()), "");
}

TEST(CApiTest, TriangleA)
{
    sa_angle* a = nullptr;
    ASSERT_EQ(sa_triangle_A("3", "2", "1", &a), SA_OK);
    EXPECT_EQ(angle_text(a), "3");
    EXPECT_EQ(sa_angle_has_atoms(a), 0);
    sa_angle_free(a);

    ASSERT_EQ(sa_triangle_A("2", "3", "1/2", &a), SA_OK);
    EXPECT_EQ(sa_angle_has_atoms(a), 1);
    double v = 0;
    ASSERT_EQ(sa_angle_to_double(a, &v), SA_OK);
    EXPECT_NEAR(v, 0.75 + std::atan(1.5) / (2 * M_PI), 1e-12);
    sa_angle_free(a);

    EXPECT_EQ(sa_triangle_A("3", "2", "0", &a), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_triangle_A("3", "2", "1/0", &a), SA_ERR_PARSE);
    EXPECT_EQ(sa_triangle_A("3", "2", "abc", &a), SA_ERR_PARSE);
    EXPECT_EQ(sa_triangle_A("3", "2", nullptr, &a), SA_ERR_NULL);
    EXPECT_EQ(sa_triangle_A("3", "2", "1", nullptr), SA_ERR_NULL);
}

TEST(CApiTest, TriangleLAndCoefficients)
{
    char* s = nullptr;
    ASSERT_EQ(sa_triangle_L("2", "3", "1/2", &s), SA_OK);
    EXPECT_EQ(take(s), "3");
    ASSERT_EQ(sa_triangle_L("3", "2", "2", &s), SA_OK);
    EXPECT_EQ(take(s), "19");
    EXPECT_EQ(sa_triangle_L("3", "2", "-1", &s), SA_ERR_DOMAIN);
    ASSERT_EQ(sa_triangle_coeffs("1", "1", "1/2", &s), SA_OK);
    const std::string text = take(s);
    EXPECT_EQ(text.rfind("a2=1/2\na1=0\na0=1/8\nc1=1/12\n", 0), 0u) << text;
}

TEST(CApiTest, Polygon)
{
    sa_polygon* p = nullptr;
    ASSERT_EQ(sa_polygon_parse("4\n0 0\n1 0\n1 1\n0 1\n", &p), SA_OK);
    EXPECT_EQ(sa_polygon_size(p), 4u);

    sa_angle* a = nullptr;
    ASSERT_EQ(sa_polygon_A(p, "3", &a), SA_OK);
    EXPECT_EQ(angle_text(a), "9");
    sa_angle_free(a);
    ASSERT_EQ(sa_oracle_A(p, "1/2", &a), SA_OK);
    EXPECT_EQ(angle_text(a), "1/4");
    sa_angle_free(a);

    char* s = nullptr;
    ASSERT_EQ(sa_polygon_L(p, "3", &s), SA_OK);
    EXPECT_EQ(take(s), "16");
    ASSERT_EQ(sa_oracle_L(p, "3", &s), SA_OK);
    EXPECT_EQ(take(s), "16");
    EXPECT_EQ(sa_polygon_L(p, "0", &s), SA_ERR_DOMAIN);
    sa_polygon_free(p);
    sa_polygon_free(nullptr);

    EXPECT_EQ(sa_polygon_parse("3\n0 0\n1 0\n", &p), SA_ERR_PARSE);
    EXPECT_EQ(sa_polygon_parse("3\n0 0\n0 1\n1 0\n", &p), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_polygon_read_file("/nonexistent/polygon.txt", &p), SA_ERR_IO);
    EXPECT_EQ(sa_polygon_A(nullptr, "1", &a), SA_ERR_NULL);
}

TEST(CApiTest, PolygonFile)
{
    const std::string path = ::testing::TempDir() + "c_api_square.txt";
    std::ofstream(path) << "# square\n4\n0 0\n2 0\n2 2\n0 2\n";
    sa_polygon* p = nullptr;
    ASSERT_EQ(sa_polygon_read_file(path.c_str(), &p), SA_OK);
    char* s = nullptr;
    ASSERT_EQ(sa_polygon_L(p, "1/2", &s), SA_OK);
    EXPECT_EQ(take(s), "4");
    sa_polygon_free(p);
    std::remove(path.c_str());
}

TEST(CApiTest, Sweep)
{
    char* s = nullptr;
    ASSERT_EQ(sa_sweep_csv("1", "1", "1/2", "1", 2, &s), SA_OK);
    EXPECT_EQ(take(s), "t,A_float,L_int\n1/2,0.25,1\n3/4,0.25,1\n1,0.5,3\n");
    EXPECT_EQ(sa_sweep_csv("1", "1", "0", "1", 2, &s), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_sweep_csv("1", "1", "1", "1/2", 2, &s), SA_ERR_DOMAIN);
    EXPECT_EQ(sa_sweep_csv("1", "1", "1/2", "1", 0, &s), SA_ERR_DOMAIN);
}

TEST(CApiTest, Spectral)
{
    char* s = nullptr;
    const double eps[] = {0.2, 0.02};
    ASSERT_EQ(sa_spectral_csv("b2", "2", "3", "1/5", eps, 2, 6, &s), SA_OK);
    const std::string csv = take(s);
    EXPECT_EQ(csv.rfind("epsilon,value,abs_error\n0.2,", 0), 0u) << csv;
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);

    EXPECT_EQ(sa_spectral_csv("a3", "2", "3", "1/5", nullptr, 0, 6, &s), SA_ERR_PARSE);
    EXPECT_EQ(sa_spectral_csv("a1", "2", "3", "1/5", nullptr, 0, 3, &s), SA_ERR_DOMAIN);
    const double rising[] = {0.02, 0.2};
    EXPECT_EQ(sa_spectral_csv("a1", "2", "3", "1/5", rising, 2, 6, &s), SA_ERR_DOMAIN);

    const long m[] = {2, -3, 1, 0};
    const long xi[] = {1, 0};
    const int grids[] = {64, 128};
    ASSERT_EQ(sa_twisted_csv(m, xi, nullptr, nullptr, grids, 2, &s), SA_OK);
    EXPECT_EQ(take(s).rfind("epsilon,value,abs_error\n0.015625,", 0), 0u);
    const long singular[] = {1, 2, 2, 4};
    EXPECT_EQ(sa_twisted_csv(singular, xi, nullptr, nullptr, grids, 2, &s), SA_ERR_DOMAIN);
}

TEST(CApiTest, Verify)
{
    char* s = nullptr;
    int passed = 0;
    ASSERT_EQ(sa_verify("knuth", &s, &passed), SA_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_NE(take(s).find("knuth: PASS"), std::string::npos);
    EXPECT_EQ(sa_verify("nope", &s, &passed), SA_ERR_PARSE);
}

TEST(CApiTest, ErrorsAreThreadLocal)
{
    char* s = nullptr;
    EXPECT_EQ(sa_dedekind("2", "4", nullptr, nullptr, 0, 0, &s), SA_ERR_DOMAIN);
    const std::string here = sa_last_error();
    std::string there = "unset";
    std::thread([&] { there = sa_last_error(); }).join();
    EXPECT_FALSE(here.empty());
    EXPECT_EQ(there, "");
    EXPECT_STREQ(sa_status_name(SA_ERR_IO), "i/o error");
}

} // namespace
