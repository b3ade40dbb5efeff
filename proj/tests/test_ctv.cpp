#include "doctest.h"

#include "oracles.hpp"
#include "tv/ctv.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"

using namespace tv;

namespace {
const Cutoffs kCtx{10, 3};

void check_equal(const USeries& a, const USeries& b, const std::string& what) {
    auto mm = first_mismatch(a, b, kCtx);
    if (mm) FAIL((what + ": " + mm->to_string()));
}

std::vector<std::pair<Partition, Partition>> outer_pairs() {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& b1 : partitions_up_to(2))
        for (const auto& b2 : partitions_up_to(2)) out.emplace_back(b1, b2);
    return out;
}
}  // namespace

TEST_CASE("vertex sum equals the operator closed form") {
    for (const auto& [b1, b2] : outer_pairs()) {
        std::string tag = "beta=" + b1.to_string() + "|" + b2.to_string();
        USeries closed = ctv_closed(b1, b2, kCtx);
        check_equal(ctv_bruteforce(b1, b2, kCtx), closed, tag + " bruteforce");
        check_equal(oracle::ctv_by_gluing(b1, b2, kCtx), closed, tag + " glued");
    }
}

TEST_CASE("explicit diagonal conjugations cancel") {
    for (const auto& [b1, b2] : outer_pairs())
        check_equal(ctv_intermediate(b1, b2, kCtx), ctv_closed(b1, b2, kCtx),
                    "beta=" + b1.to_string() + "|" + b2.to_string());
}

TEST_CASE("pre-correspondence vacuum expectation value") {
    // the word with unpaired q^{+-K/2} gaps needs a cutoff; every intermediate
    // state of size > qmax is invisible at this Kaehler window
    EvalOptions opts;
    opts.max_intermediate = kCtx.qmax;
    for (const auto& [b1, b2] : outer_pairs()) {
        if (b1.size() + b2.size() > 3) continue;
        check_equal(ctv_med(b1, b2, kCtx, opts), ctv_closed(b1, b2, kCtx),
                    "beta=" + b1.to_string() + "|" + b2.to_string());
    }
}

TEST_CASE("flopped geometry: vertex sum, closed form and gluing agree") {
    for (const auto& [b1, b2] : outer_pairs()) {
        std::string tag = "beta=" + b1.to_string() + "|" + b2.to_string();
        USeries closed = flop_closed(b1, b2, kCtx);
        check_equal(flop_bruteforce(b1, b2, kCtx), closed, tag + " bruteforce");
        check_equal(oracle::flop_by_gluing(b1, b2, kCtx), closed, tag + " glued");
    }
}

TEST_CASE("bent-cut word is uncertifiable without a cutoff, correct with one") {
    Partition b1 = Partition::parse("1"), b2 = Partition::parse("2");
    CHECK_THROWS_AS(flop_bis(b1, b2, kCtx, {}), UncertifiableTruncation);
    EvalOptions opts;
    opts.max_intermediate = 2;
    Cutoffs c2{10, 2};
    for (const auto& [a, b] : outer_pairs()) {
        if (a.size() + b.size() > 2) continue;
        USeries bis = flop_bis(a, b, kCtx, opts);
        CHECK(bis.qtrunc() <= 2);
        auto mm = first_mismatch(bis, flop_closed(a, b, c2), c2);
        if (mm)
            FAIL(("beta=" + a.to_string() + "|" + b.to_string() + ": " +
                  mm->to_string()));
    }
}

TEST_CASE("flop transformation rule on the Kaehler moduli") {
    for (const auto& [b1, b2] : outer_pairs()) {
        if (b1.size() + b2.size() > 3) continue;
        auto mm = flop_match(b1, b2, 2, 6);
        if (mm)
            FAIL(("beta=" + b1.to_string() + "|" + b2.to_string() + ": " +
                  mm->to_string()));
    }
}
