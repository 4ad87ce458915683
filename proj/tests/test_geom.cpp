#include "plabic/geom.hpp"

#include "support.hpp"

#include <algorithm>
#include <cmath>

using namespace plabic;
using namespace plabic::geom;
using plabic::testing::error_kind;

namespace {

Dir d(long x, long y) { return {Q(x), Q(y)}; }
Point pt(long x, long y) { return {Q(x), Q(y)}; }

Dir random_dir(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-9, 9);
    for (;;) {
        Dir r = d(u(rng), u(rng));
        if (!is_zero(r)) return r;
    }
}

// Angle in [0, 2pi) measured in doubles; exact ties never occur for the pairwise non-collinear inputs used.
double angle(const Dir& v) {
    double a = std::atan2(v.dy.get_d(), v.dx.get_d());
    return a < 0 ? a + 2 * M_PI : a;
}

int cyclic_oracle(const Dir& f, const Dir& g, const Dir& h) {
    double a = angle(f), b = std::fmod(angle(g) - a + 4 * M_PI, 2 * M_PI), c = std::fmod(angle(h) - a + 4 * M_PI, 2 * M_PI);
    return b < c ? 0 : 1;
}

long cross_oracle(long ax, long ay, long bx, long by) { return ax * by - ay * bx; }

}  // namespace

TEST(OrientSign, Examples) {
    EXPECT_EQ(orient_sign(d(1, 0), d(0, 1)), 1);
    EXPECT_EQ(orient_sign(d(1, 0), d(3, 0)), 0);
    EXPECT_EQ(orient_sign(d(0, 1), d(1, 0)), -1);
    EXPECT_EQ(orient_sign(d(1, 0), d(-2, 0)), 0);
}

TEST(OrientSign, ZeroDirectionIsInputError) {
    EXPECT_EQ(error_kind([] { orient_sign(d(0, 0), d(1, 0)); }), ErrorKind::Input);
}

TEST(OrientSign, MatchesIntegerCrossAndIsAntisymmetric) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        Dir u = random_dir(rng), v = random_dir(rng);
        long c = cross_oracle(u.dx.get_num().get_si(), u.dy.get_num().get_si(), v.dx.get_num().get_si(),
                              v.dy.get_num().get_si());
        EXPECT_EQ(orient_sign(u, v), (c > 0) - (c < 0));
        EXPECT_EQ(orient_sign(u, v), -orient_sign(v, u));
    }
}

TEST(LocalWind, Examples) {
    EXPECT_EQ(local_wind(d(1, 0), d(0, 1), d(1, 1)), 1);
    EXPECT_EQ(local_wind(d(1, 0), d(2, 0), d(1, 1)), 0);
    EXPECT_EQ(local_wind(d(1, 0), d(2, 0), d(-3, 1)), 0);
    EXPECT_EQ(local_wind(d(0, -1), d(-1, 0), d(-1, -1)), -1);
    EXPECT_EQ(local_wind(d(1, 0), d(0, 1), d(-1, 1)), 0);
}

TEST(LocalWind, AntiparallelPairIsGenericityError) {
    EXPECT_EQ(error_kind([] { local_wind(d(1, 0), d(-1, 0), d(0, 1)); }), ErrorKind::Genericity);
}

TEST(LocalWind, ThreeSignRuleAndAntisymmetry) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; ++k) {
        Dir u = random_dir(rng), v = random_dir(rng), l = random_dir(rng);
        if (antiparallel(u, v)) continue;
        int a = orient_sign(u, v), b = orient_sign(u, l), c = orient_sign(l, v);
        int expect = (a == 1 && b == 1 && c == 1) ? 1 : (a == -1 && b == -1 && c == -1) ? -1 : 0;
        EXPECT_EQ(local_wind(u, v, l), expect);
        EXPECT_EQ(local_wind(u, v, l), -local_wind(v, u, l));
    }
}

TEST(LocalWind, FullTurnWindsOnce) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        std::vector<Dir> ds;
        while (ds.size() < 5) {
            Dir x = random_dir(rng);
            bool fresh = true;
            for (const auto& y : ds) fresh = fresh && !collinear(x, y);
            if (fresh) ds.push_back(x);
        }
        std::sort(ds.begin(), ds.end(), [](const Dir& a, const Dir& b) { return angle(a) < angle(b); });
        Dir l = random_dir(rng);
        bool generic = true;
        for (const auto& y : ds) generic = generic && !collinear(l, y);
        if (!generic) continue;
        int total = 0;
        bool small_gaps = true;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const Dir &a = ds[i], &b = ds[(i + 1) % ds.size()];
            small_gaps = small_gaps && orient_sign(a, b) > 0;
            if (small_gaps) total += local_wind(a, b, l);
        }
        if (small_gaps) {
            EXPECT_EQ(total, 1);
        }
    }
}

TEST(CyclicOrder, Examples) {
    EXPECT_EQ(cyclic_order(d(1, 0), d(0, 1), d(-1, 0)), 0);
    EXPECT_EQ(cyclic_order(d(1, 0), d(-1, -1), d(0, 1)), 1);
    EXPECT_EQ(cyclic_order(d(0, 1), d(-1, 0), d(1, 0)), 0);
}

TEST(CyclicOrder, ParallelInputsAreGenericityErrors) {
    EXPECT_EQ(error_kind([] { cyclic_order(d(1, 0), d(2, 0), d(0, 1)); }), ErrorKind::Genericity);
}

TEST(CyclicOrder, AngularSortOracleAndSymmetries) {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 2000) {
        Dir f = random_dir(rng), g = random_dir(rng), h = random_dir(rng);
        if (parallel(f, g) || parallel(g, h) || parallel(f, h)) continue;
        ++done;
        int c = cyclic_order(f, g, h);
        EXPECT_EQ(c, cyclic_oracle(f, g, h));
        EXPECT_EQ(c, cyclic_order(g, h, f));
        EXPECT_EQ(c, 1 - cyclic_order(f, h, g));
    }
}

TEST(RaySegmentHits, Examples) {
    Ray up{pt(0, 0), d(0, 1)};
    EXPECT_EQ(ray_segment_hits(up, pt(-1, 1), pt(1, 1)), 1);
    EXPECT_EQ(ray_segment_hits(up, pt(1, 1), pt(2, 1)), 0);
    EXPECT_EQ(ray_segment_hits(up, pt(-1, -1), pt(1, -1)), 0);
}

TEST(RaySegmentHits, EndpointOnRayIsGenericityError) {
    Ray up{pt(0, 0), d(0, 1)};
    EXPECT_EQ(error_kind([&] { ray_segment_hits(up, pt(0, 2), pt(1, 3)); }), ErrorKind::Genericity);
}

TEST(RaySegmentHits, ExactIntersectionOracle) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> u(-6, 6);
    int done = 0;
    while (done < 2000) {
        Point o = pt(u(rng), u(rng)), a = pt(u(rng), u(rng)), b = pt(u(rng), u(rng));
        Dir r = random_dir(rng);
        if (a == b || on_segment(o, a, b)) continue;
        if (orient_sign(r, a - o) == 0 || orient_sign(r, b - o) == 0) continue;
        ++done;
        // Solve o + t r = a + s (b - a) by Cramer's rule.
        Dir ab = b - a, ao = a - o;
        Q den = cross(r, ab);
        int expect = 0;
        if (den != 0) {
            Q t = cross(ao, ab) / den, s = cross(ao, r) / den;
            expect = (t > 0 && s > 0 && s < 1) ? 1 : 0;
        }
        EXPECT_EQ(ray_segment_hits({o, r}, a, b), expect);
    }
}

TEST(Gamma2, HalfOfOneMinusSign) {
    EXPECT_EQ(gamma2(d(1, 0), d(0, 1)), 0);
    EXPECT_EQ(gamma2(d(0, 1), d(1, 0)), 1);
}

TEST(Polygon, ContainmentAndArea) {
    std::vector<Point> sq{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    EXPECT_TRUE(inside_polygon(pt(1, 1), sq));
    EXPECT_FALSE(inside_polygon(pt(3, 1), sq));
    EXPECT_EQ(signed_area2(sq), Q(8));
    EXPECT_TRUE(segments_meet(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    EXPECT_FALSE(segments_meet(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
    EXPECT_TRUE(on_segment(pt(1, 1), pt(0, 0), pt(2, 2)));
}
