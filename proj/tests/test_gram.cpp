#include <doctest.h>

#include <cmath>

#include "reference_values.hpp"
#include "support.hpp"
#include "zlab/gram.hpp"
#include "zlab/phase.hpp"

using zlab::Errc;
using zlab::GramKind;

TEST_CASE("Gram points match high-precision values") {
    for (const auto& row : ref::kGram) {
        CAPTURE(row.nu);
        const auto c = zlab::solve_gram(row.nu, GramKind::classical);
        const auto s = zlab::solve_gram(row.nu, GramKind::shifted);
        CHECK(c.t == doctest::Approx(row.classical).epsilon(1e-14));
        CHECK(s.t == doctest::Approx(row.shifted).epsilon(1e-14));
        CHECK(c.residual <= 1e-8);
        CHECK(s.residual <= 1e-8);
    }
    CHECK(testing::thrown([] { zlab::solve_gram(0, GramKind::shifted); }) == Errc::RangeViolation);
}

TEST_CASE("shifted points sit where cos theta vanishes and sin theta alternates") {
    for (long nu = 1000; nu < 1100; ++nu) {
        const auto p = zlab::solve_gram(nu, GramKind::shifted);
        const double th = zlab::phase::reduced(zlab::theta(p.t).theta);
        CHECK(std::fabs(std::cos(th)) <= 1e-8);
        CHECK(std::sin(th) * (nu % 2 == 0 ? 1.0 : -1.0) >= 1.0 - 1e-6);
    }
}

TEST_CASE("classical and shifted points interlace") {
    for (long nu = 1; nu < 300; ++nu) {
        const double c0 = zlab::solve_gram(nu, GramKind::classical).t;
        const double s0 = zlab::solve_gram(nu, GramKind::shifted).t;
        const double c1 = zlab::solve_gram(nu + 1, GramKind::classical).t;
        CHECK(c0 < s0);
        CHECK(s0 < c1);
    }
}

TEST_CASE("enumeration respects the closed interval") {
    const zlab::Span span{1e5, 20.0};
    const auto pts = zlab::enumerate_span(span, GramKind::shifted);
    REQUIRE(pts.size() >= 2);
    CHECK(pts.front().t >= span.T);
    CHECK(pts.back().t <= span.end());
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].nu == pts[i - 1].nu + 1);
    const long before = pts.front().nu - 1;
    CHECK(zlab::solve_gram(before, GramKind::shifted).t < span.T);
    CHECK(zlab::solve_gram(pts.back().nu + 1, GramKind::shifted).t > span.end());
    CHECK(zlab::first_index_at_or_after(span.T, GramKind::shifted) == pts.front().nu);

    const auto edge = zlab::enumerate_span(zlab::Span{pts[3].t, pts[5].t - pts[3].t}, GramKind::shifted);
    REQUIRE(edge.size() == 3);
    CHECK(edge.front().nu == pts[3].nu);
    CHECK(edge.back().nu == pts[5].nu);

    const zlab::Window w = zlab::make_window(1e5, 10.0);
    const auto in_window = zlab::enumerate_window(w, GramKind::classical);
    for (const auto& p : in_window) CHECK(w.contains(p.t));
}

TEST_CASE("gaps follow pi / ln P0") {
    for (double T : {1e4, 1e6}) {
        const zlab::Span span{T, std::pow(T, 0.25)};
        const auto pts = zlab::enumerate_span(span, GramKind::shifted);
        const zlab::SumReport r = zlab::spacing_report(pts, span);
        CHECK(r.main_term == doctest::Approx(M_PI / std::log(std::sqrt(T / (2.0 * M_PI)))));
        CHECK(std::fabs(r.ratio() - 1.0) <= (T < 1e5 ? 0.01 : 0.003));
        CHECK(r.pass);
    }
    std::vector<zlab::GramPoint> one{zlab::solve_gram(10, GramKind::shifted)};
    CHECK(testing::thrown([&] { zlab::spacing_report(one, zlab::Span{one[0].t, 1.0}); }) == Errc::RangeViolation);
    std::vector<zlab::GramPoint> mixed{zlab::solve_gram(10, GramKind::shifted), zlab::solve_gram(11, GramKind::classical)};
    CHECK(testing::thrown([&] { zlab::spacing_report(mixed, zlab::Span{mixed[0].t, 5.0}); }) == Errc::RangeViolation);
}

TEST_CASE("the cache returns identical points") {
    const auto a = zlab::solve_gram(4242, GramKind::classical);
    const auto size = zlab::gram_cache_size(GramKind::classical);
    const auto b = zlab::solve_gram(4242, GramKind::classical);
    CHECK(a.t == b.t);
    CHECK(zlab::gram_cache_size(GramKind::classical) == size);
}
