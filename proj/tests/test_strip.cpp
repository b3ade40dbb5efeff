#include "doctest.h"

#include "oracles.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/schur.hpp"
#include "tv/strip.hpp"
#include "tv/vertex.hpp"

using namespace tv;

namespace {
const Cutoffs kCtx{10, 3};

StripData make_strip(std::vector<int> sigma, std::vector<Partition> beta,
                     Partition a0 = {}, Partition aN = {}) {
    StripData s;
    s.sigma = std::move(sigma);
    s.beta = std::move(beta);
    static const Var qs[] = {Q1, Q2, Q3};
    for (size_t n = 0; n + 1 < s.sigma.size(); ++n)
        s.Q.push_back(Mono::var(qs[n % 3]));
    s.alpha0 = std::move(a0);
    s.alphaN = std::move(aN);
    return s;
}

void check_equal(const USeries& a, const USeries& b, const std::string& what) {
    auto mm = first_mismatch(a, b, kCtx);
    if (mm) FAIL((what + ": " + mm->to_string()));
}
}  // namespace

TEST_CASE("single vertex strips are topological vertices") {
    for (const auto& a0 : partitions_up_to(2))
        for (const auto& a1 : partitions_up_to(2))
            for (const auto& b : partitions_up_to(2)) {
                StripData up = make_strip({1}, {b}, a0, a1);
                check_equal(strip_fermionic(up, kCtx), vertex(a0, a1, b, kCtx),
                            "up vertex");
                StripData down = make_strip({-1}, {b}, a0, a1);
                check_equal(strip_fermionic(down, kCtx), vertex(a1, a0, b, kCtx),
                            "down vertex");
            }
}

TEST_CASE("conifold-type strips reproduce the classic product formulas") {
    // opposite vertical legs: sum (-Q)^{|a|} s_a s_{t a} = prod (1 - Q q^{i+j-1})
    StripData s = make_strip({1, -1}, {Partition(), Partition()});
    check_equal(strip_closed(s, kCtx),
                double_product(Mono::var(Q1), {}, {}, 1, kCtx), "conifold");
    // parallel vertical legs: Cauchy product
    StripData s2 = make_strip({1, 1}, {Partition(), Partition()});
    check_equal(strip_closed(s2, kCtx),
                double_product(Mono::var(Q1), {}, {}, -1, kCtx), "cauchy");
}

TEST_CASE("fermionic, closed-form and glued amplitudes agree on closed strips") {
    auto betas = partitions_up_to(2);
    // N = 2: all sign patterns, all vertical partitions of size <= 2
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (const auto& b1 : betas)
                for (const auto& b2 : betas) {
                    StripData s = make_strip({s1, s2}, {b1, b2});
                    USeries fer = strip_fermionic(s, kCtx);
                    USeries cls = strip_closed(s, kCtx);
                    USeries glu = oracle::strip_by_gluing(s, kCtx);
                    std::string tag = "N=2 sigma=" + std::to_string(s1) + "," +
                                      std::to_string(s2) + " beta=" +
                                      b1.to_string() + "|" + b2.to_string();
                    check_equal(fer, cls, tag + " fermionic/closed");
                    check_equal(fer, glu, tag + " fermionic/glued");
                }
    // N = 3: all sign patterns, vertical partitions with at most 3 boxes total
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> sig{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1,
                             mask & 4 ? 1 : -1};
        for (const auto& b1 : betas)
            for (const auto& b2 : betas)
                for (const auto& b3 : betas) {
                    if (b1.size() + b2.size() + b3.size() > 3) continue;
                    StripData s = make_strip(sig, {b1, b2, b3});
                    USeries fer = strip_fermionic(s, kCtx);
                    std::string tag = "N=3 mask=" + std::to_string(mask);
                    check_equal(fer, strip_closed(s, kCtx), tag + " closed");
                    check_equal(fer, oracle::strip_by_gluing(s, kCtx),
                                tag + " glued");
                }
    }
}

TEST_CASE("open-ended strips match direct gluing") {
    auto ends = partitions_up_to(2);
    Partition b1 = Partition::parse("1"), b2 = Partition::parse("2");
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (const auto& a0 : ends)
                for (const auto& aN : ends) {
                    StripData s = make_strip({s1, s2}, {b1, b2}, a0, aN);
                    check_equal(strip_fermionic(s, kCtx),
                                oracle::strip_by_gluing(s, kCtx),
                                "open N=2 sigma=" + std::to_string(s1) + "," +
                                    std::to_string(s2) + " a0=" + a0.to_string() +
                                    " aN=" + aN.to_string());
                }
}
