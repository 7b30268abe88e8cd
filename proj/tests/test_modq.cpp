#include <doctest.h>

#include "modpart/modq.hpp"
#include "modpart/rng.hpp"
#include "oracles.hpp"

using namespace modpart;

TEST_SUITE_BEGIN("modq");

TEST_CASE("incidence matrix") {
    BoxSet b3 = BoxSet::full(3, 1);
    IncidenceMatrix m = incidence_matrix(Coord{{0}}, b3);
    REQUIRE(m.cols.size() == 3);
    CHECK(m.cols[0] == std::vector<std::uint8_t>{1});
    CHECK(m.cols[1] == std::vector<std::uint8_t>{0});
    CHECK(m.cols[2] == std::vector<std::uint8_t>{0});

    BoxSet singleton{3, 2, {Coord{{0, 0}}}};
    IncidenceMatrix self = incidence_matrix(Coord{{0, 0}}, singleton);
    CHECK(self.cols == std::vector<std::vector<std::uint8_t>>{{1, 1}});

    BoxSet full22 = BoxSet::full(2, 2);
    IncidenceMatrix m22 = incidence_matrix(Coord{{0, 0}}, full22);
    CHECK(m22.cols == std::vector<std::vector<std::uint8_t>>{{1, 1}, {1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("subgroup size by closure") {
    CHECK(subgroup_size({{2}}, 4, 1) == 2);
    CHECK(subgroup_size({{1, 0}, {0, 1}}, 3, 2) == 9);
    CHECK(subgroup_size({{4}}, 6, 1) == 3);
    CHECK(subgroup_size({}, 5, 2) == 1);
}

TEST_CASE("n_value landmarks") {
    BoxSet b3 = BoxSet::full(3, 1);
    for (const Coord& c : b3.members) CHECK(n_value(c, b3) == 1);

    BoxSet singleton{3, 2, {Coord{{1, 2}}}};
    CHECK(n_value(Coord{{1, 2}}, singleton) == 3);

    BoxSet full22 = BoxSet::full(2, 2);
    for (const Coord& c : full22.members) CHECK(n_value(c, full22) == 1);
}

TEST_CASE("n_value times subgroup size is q^k") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int q = 2 + static_cast<int>(mix64(seed, 0) % 5);
        int k = 1 + static_cast<int>(mix64(seed, 1) % 3);
        std::uint64_t points = 1;
        for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(q);
        BitStream bits(mix64(seed, 2));
        BoxSet b{q, k, {}};
        for (std::uint64_t i = 0; i < points; ++i)
            if (bits.next_bit()) b.members.push_back(coord_from_index(i, q, k));
        if (b.members.empty()) continue;
        const Coord& c = b.members[mix64(seed, 3) % b.members.size()];
        IncidenceMatrix m = incidence_matrix(c, b);
        CHECK(n_value(c, b) * subgroup_size(m.cols, q, k) == points);
    }
}

TEST_CASE("congruence solution counts: zero or exactly N") {
    CHECK(count_congruence_solutions(IncidenceMatrix{5, 1, {{1}}}, {0}) == 1);
    CHECK(count_congruence_solutions(IncidenceMatrix{2, 2, {{1, 1}}}, {1}) == 2);

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int q = 2 + static_cast<int>(mix64(seed, 0) % 5);
        int k = 1 + static_cast<int>(mix64(seed, 1) % 3);
        std::uint64_t points = 1;
        for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(q);
        BitStream bits(mix64(seed, 2));
        BoxSet b{q, k, {}};
        for (std::uint64_t i = 0; i < points; ++i)
            if (bits.next_bit()) b.members.push_back(coord_from_index(i, q, k));
        if (b.members.empty()) continue;
        const Coord& c = b.members[mix64(seed, 3) % b.members.size()];
        IncidenceMatrix m = incidence_matrix(c, b);
        std::uint64_t n = n_value(c, b);

        // random right-hand side
        std::vector<std::uint8_t> rhs(m.cols.size());
        for (std::size_t i = 0; i < rhs.size(); ++i)
            rhs[i] = static_cast<std::uint8_t>(mix64(seed, 10 + i) % static_cast<std::uint64_t>(q));
        std::uint64_t solutions = count_congruence_solutions(m, rhs);
        CHECK((solutions == 0 || solutions == n));

        // rhs = a0 * M always has exactly N solutions
        Coord a0 = coord_from_index(mix64(seed, 4) % points, q, k);
        std::vector<std::uint8_t> image(m.cols.size());
        for (std::size_t col = 0; col < m.cols.size(); ++col) {
            int dot = 0;
            for (int j = 0; j < k; ++j) dot += a0.e[static_cast<std::size_t>(j)] * m.cols[col][static_cast<std::size_t>(j)];
            image[col] = static_cast<std::uint8_t>(dot % q);
        }
        CHECK(count_congruence_solutions(m, image) == n);
    }
}

TEST_CASE("combinatorial subspace detector landmarks") {
    CHECK(is_combinatorial_subspace(BoxSet::full(3, 2)));
    CHECK(is_combinatorial_subspace(BoxSet::full(4, 3)));

    BoxSet diag{3, 2, {Coord{{0, 0}}, Coord{{1, 1}}, Coord{{2, 2}}}};
    CHECK(is_combinatorial_subspace(diag));

    BoxSet partial{3, 2, {Coord{{0, 0}}, Coord{{1, 1}}}};
    CHECK_FALSE(is_combinatorial_subspace(partial));
}

TEST_CASE("detector agrees with representation enumeration for q<=3, k<=2") {
    for (int q = 2; q <= 3; ++q) {
        for (int k = 1; k <= 2; ++k) {
            std::uint64_t points = 1;
            for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(q);
            auto expected = oracle::combinatorial_subspace_masks(q, k);
            for (std::uint64_t mask = 1; mask < (1ull << points); ++mask) {
                BoxSet l = BoxSet::from_mask(q, k, mask);
                CHECK(is_combinatorial_subspace(l) == (expected.count(mask) > 0));
            }
        }
    }
}

TEST_CASE("sum inequality landmarks") {
    SumInequality full31 = verify_sum_inequality(BoxSet::full(3, 1));
    CHECK(full31.sum == 3);
    CHECK(full31.bound == 3);
    CHECK(full31.equality);

    SumInequality full32 = verify_sum_inequality(BoxSet::full(3, 2));
    CHECK(full32.sum == 9);
    CHECK(full32.equality);

    BoxSet almost = BoxSet::full(3, 2);
    almost.members.pop_back();
    SumInequality dented = verify_sum_inequality(almost);
    CHECK(dented.sum < 9);

    CHECK_THROWS_AS(verify_sum_inequality(BoxSet::full(2, 2)), std::invalid_argument);
}

TEST_CASE("monotonicity: adding boxes never increases N") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int q = 3 + static_cast<int>(mix64(seed, 0) % 3);
        int k = 1 + static_cast<int>(mix64(seed, 1) % 2);
        std::uint64_t points = 1;
        for (int i = 0; i < k; ++i) points *= static_cast<std::uint64_t>(q);
        BitStream bits(mix64(seed, 2));
        BoxSet small{q, k, {}}, large{q, k, {}};
        for (std::uint64_t i = 0; i < points; ++i) {
            bool in_small = bits.next_bit();
            bool in_large = in_small || bits.next_bit();
            if (in_small) small.members.push_back(coord_from_index(i, q, k));
            if (in_large) large.members.push_back(coord_from_index(i, q, k));
        }
        if (small.members.empty()) continue;
        const Coord& c = small.members[mix64(seed, 3) % small.members.size()];
        CHECK(n_value(c, large) <= n_value(c, small));
    }
}

TEST_CASE("exhaustive lemma audit") {
    LemmaAuditReport r32 = exhaustive_lemma_audit_serial(3, 2);
    CHECK(r32.sets_audited == 511);
    CHECK(r32.violations.empty());
    CHECK(r32.equality_count == oracle::combinatorial_subspace_masks(3, 2).size());

    LemmaAuditReport r41 = exhaustive_lemma_audit_serial(4, 1);
    CHECK(r41.sets_audited == 15);
    CHECK(r41.violations.empty());
    CHECK(r41.equality_count == 1); // only L = [4]

    CHECK_THROWS_AS(exhaustive_lemma_audit(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_lemma_audit(2, 2), std::invalid_argument);
}

TEST_CASE("sampled lemma audit is clean and deterministic") {
    LemmaAuditReport a = sampled_lemma_audit(3, 3, 10000, 1);
    CHECK(a.sets_audited == 10000);
    CHECK(a.violations.empty());
    LemmaAuditReport b = sampled_lemma_audit(3, 3, 10000, 1);
    CHECK(a.equality_count == b.equality_count);
}

TEST_CASE("audit report serializes the documented fields") {
    auto j = audit_report_json(exhaustive_lemma_audit_serial(4, 1));
    CHECK(j["q"] == 4);
    CHECK(j["k"] == 1);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["sets_audited"] == 15);
    CHECK(j["violations"].empty());
    CHECK(j["equality_count"] == 1);
}

TEST_SUITE_END();
