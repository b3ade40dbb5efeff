#include "doctest.h"

#include "tv/partition.hpp"

#include <algorithm>

using namespace tv;

TEST_CASE("parse and basic accessors") {
    auto p = Partition::parse("3,1");
    CHECK(p.parts() == std::vector<int>{3, 1});
    CHECK(p.size() == 4);
    CHECK(p.length() == 2);
    CHECK(p.part(1) == 3);
    CHECK(p.part(2) == 1);
    CHECK(p.part(3) == 0);
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("3 1") == p);
    CHECK_THROWS(Partition::parse("1,3"));   // not weakly decreasing
    CHECK(Partition::parse("2,0") == Partition::parse("2"));  // trailing zeros ok
    CHECK_THROWS(Partition::parse("0,2"));   // interior zero part
    CHECK_THROWS(Partition::parse("a"));
    CHECK(p.to_string() == "3,1");
    CHECK(Partition().to_string() == "");
}

TEST_CASE("conjugate") {
    CHECK(Partition::parse("3,1").conjugate() == Partition::parse("2,1,1"));
    CHECK(Partition::parse("2,1,1").conjugate() == Partition::parse("3,1"));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& lam : partitions_up_to(7))
        CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("kappa") {
    CHECK(Partition::parse("2").kappa() == 2);
    CHECK(Partition::parse("1,1").kappa() == -2);
    CHECK(Partition().kappa() == 0);
    // kappa is antisymmetric under conjugation and always even
    for (const auto& lam : partitions_up_to(7)) {
        CHECK(lam.kappa() == -lam.conjugate().kappa());
        CHECK(lam.kappa() % 2 == 0);
    }
}

TEST_CASE("enumeration") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_up_to(5).size() == 19);  // 1+1+2+3+5+7
    auto all = partitions_up_to(5);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Partition& a, const Partition& b) {
                             return a.size() < b.size();
                         }));
}

TEST_CASE("containment / subpartitions / intersect") {
    auto lam = Partition::parse("3,2");
    CHECK(lam.contains(Partition::parse("2,2")));
    CHECK_FALSE(lam.contains(Partition::parse("1,1,1")));
    auto subs = subpartitions(lam);
    CHECK(subs.size() == 9);  // (i,j) with 3>=i>=j>=0 minus nothing: boxes of (4,3)/... = 9
    for (const auto& s : subs) CHECK(lam.contains(s));
    CHECK(intersect(Partition::parse("3,1"), Partition::parse("2,2")) ==
          Partition::parse("2,1"));
}
