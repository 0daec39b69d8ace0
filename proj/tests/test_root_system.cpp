#include <catch2/catch_amalgamated.hpp>

#include "schubert/root_system.hpp"

#include <vector>

using schubert::FiniteType;
using schubert::RootSystem;
using schubert::TypeLabel;

namespace {

std::shared_ptr<const RootSystem> sys(char t, int r) { return RootSystem::build(t, r); }

}  // namespace

TEST_CASE("positive root counts") {
    CHECK(sys('A', 1)->root_count() == 1);
    CHECK(sys('A', 2)->root_count() == 3);
    CHECK(sys('A', 3)->root_count() == 6);
    CHECK(sys('B', 3)->root_count() == 9);
    CHECK(sys('B', 4)->root_count() == 16);
    CHECK(sys('C', 2)->root_count() == 4);
    CHECK(sys('C', 3)->root_count() == 9);
    CHECK(sys('D', 4)->root_count() == 12);
    CHECK(sys('D', 5)->root_count() == 20);
    CHECK(sys('G', 2)->root_count() == 6);
    CHECK(sys('F', 4)->root_count() == 24);
    CHECK(sys('E', 6)->root_count() == 36);
    CHECK(sys('E', 7)->root_count() == 63);
    CHECK(sys('E', 8)->root_count() == 120);
}

TEST_CASE("highest root coefficients") {
    using V = std::vector<long long>;
    CHECK(sys('A', 2)->marks() == V{1, 1});
    CHECK(sys('B', 3)->marks() == V{1, 2, 2});
    CHECK(sys('C', 3)->marks() == V{2, 2, 1});
    CHECK(sys('D', 4)->marks() == V{1, 2, 1, 1});
    CHECK(sys('G', 2)->marks() == V{3, 2});
    CHECK(sys('F', 4)->marks() == V{2, 3, 4, 2});
    CHECK(sys('E', 6)->marks() == V{1, 2, 2, 3, 2, 1});
    CHECK(sys('E', 7)->marks() == V{2, 2, 3, 4, 3, 2, 1});
    CHECK(sys('E', 8)->marks() == V{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("exponents and degrees") {
    using VI = std::vector<int>;
    CHECK(sys('A', 2)->exponents() == VI{1, 2});
    CHECK(sys('B', 3)->exponents() == VI{1, 3, 5});
    CHECK(sys('D', 4)->exponents() == VI{1, 3, 3, 5});
    CHECK(sys('G', 2)->exponents() == VI{1, 5});
    CHECK(sys('F', 4)->exponents() == VI{1, 5, 7, 11});
    CHECK(sys('E', 6)->exponents() == VI{1, 4, 5, 7, 8, 11});
    CHECK(sys('E', 8)->exponents() == VI{1, 7, 11, 13, 17, 19, 23, 29});

    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 4}, {'C', 3}, {'D', 5}, {'E', 7}}) {
        auto rs = sys(t, r);
        REQUIRE(rs->degrees().size() == rs->exponents().size());
        long long roots = 0;
        for (std::size_t i = 0; i < rs->degrees().size(); ++i) {
            CHECK(rs->degrees()[i] == rs->exponents()[i] + 1);
            roots += rs->exponents()[i];
        }
        // sum of exponents counts the positive roots
        CHECK(roots == rs->root_count());
    }
}

TEST_CASE("minuscule nodes are exactly the mark-one nodes") {
    auto expect = [](char t, int r, std::vector<int> nodes) {
        auto rs = sys(t, r);
        std::vector<int> got;
        for (int i = 1; i <= r; ++i) {
            if (rs->is_minuscule_node(i)) got.push_back(i);
        }
        CHECK(got == nodes);
        CHECK_FALSE(rs->is_minuscule_node(0));
    };
    expect('A', 2, {1, 2});
    expect('B', 3, {1});
    expect('C', 3, {3});
    expect('D', 4, {1, 3, 4});
    expect('G', 2, {});
    expect('F', 4, {});
    expect('E', 6, {1, 6});
    expect('E', 7, {7});
    expect('E', 8, {});
}

TEST_CASE("root length classes") {
    auto b3 = sys('B', 3);
    CHECK(b3->node_long(0));
    CHECK(b3->node_long(1));
    CHECK(b3->node_long(2));
    CHECK_FALSE(b3->node_long(3));

    auto c3 = sys('C', 3);
    CHECK(c3->node_long(0));
    CHECK_FALSE(c3->node_long(1));
    CHECK_FALSE(c3->node_long(2));
    CHECK(c3->node_long(3));

    auto g2 = sys('G', 2);
    CHECK_FALSE(g2->node_long(1));
    CHECK(g2->node_long(2));
    CHECK(g2->node_long(0));

    // simply laced systems have a single length class
    auto d4 = sys('D', 4);
    for (int i = 0; i <= 4; ++i) CHECK(d4->node_long(i));

    CHECK(g2->max_bond() == 3);
    CHECK(b3->max_bond() == 2);
    CHECK(sys('A', 3)->max_bond() == 1);
}

TEST_CASE("pairing matrix entries") {
    // cartan(i, j) evaluates node j's simple root on node i's coroot
    auto a1 = sys('A', 1);
    CHECK(a1->cartan(0, 1) == -2);
    CHECK(a1->cartan(1, 0) == -2);
    CHECK(a1->cartan(1, 1) == 2);

    auto g2 = sys('G', 2);
    CHECK(g2->cartan(1, 2) == -3);
    CHECK(g2->cartan(2, 1) == -1);

    auto b3 = sys('B', 3);
    CHECK(b3->cartan(2, 3) == -1);
    CHECK(b3->cartan(3, 2) == -2);
    CHECK(b3->cartan(0, 2) == -1);
    CHECK(b3->cartan(0, 1) == 0);

    auto c2 = sys('C', 2);
    CHECK(c2->cartan(0, 1) == -1);
    CHECK(c2->cartan(1, 0) == -2);

    // the affine node closes a cycle in the first family
    auto a2 = sys('A', 2);
    CHECK(a2->cartan(0, 1) == -1);
    CHECK(a2->cartan(0, 2) == -1);
    CHECK(a2->cartan(1, 2) == -1);
}

TEST_CASE("bond table") {
    auto a1 = sys('A', 1);
    CHECK(a1->bond(0, 1).unbounded);

    auto g2 = sys('G', 2);
    CHECK(g2->bond(1, 2).multiplicity == 3);
    CHECK_FALSE(g2->bond(1, 2).unbounded);

    auto b3 = sys('B', 3);
    CHECK(b3->bond(2, 3).multiplicity == 2);
    CHECK(b3->bond(1, 2).multiplicity == 1);
    CHECK(b3->bond(1, 3).multiplicity == 0);
    CHECK(b3->bond(0, 2).multiplicity == 1);
    CHECK(b3->bond(0, 1).multiplicity == 0);
}

TEST_CASE("unsupported inputs are rejected") {
    CHECK_THROWS_AS(RootSystem::build('H', 3), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('A', 0), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('B', 1), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('C', 1), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('D', 3), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('E', 9), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('F', 5), schubert::UnsupportedType);
    CHECK_THROWS_AS(RootSystem::build('G', 3), schubert::UnsupportedType);
}

TEST_CASE("translation lattice membership") {
    CHECK(sys('A', 2)->in_coroot_lattice({1, 1}));
    CHECK_FALSE(sys('A', 2)->in_coroot_lattice({1, 0}));
    CHECK(sys('B', 3)->in_coroot_lattice({3, 0, -1}));
    CHECK_FALSE(sys('B', 3)->in_coroot_lattice({1, 0, -2}));
    CHECK(sys('C', 3)->in_coroot_lattice({0, 0, 2}));
    CHECK_FALSE(sys('C', 3)->in_coroot_lattice({0, 0, 1}));
    CHECK(sys('D', 4)->in_coroot_lattice({-1, 1, -1, 1}));
    CHECK(sys('D', 4)->in_coroot_lattice({2, -1, 0, 0}));
    CHECK(sys('D', 5)->in_coroot_lattice({0, 0, 0, 1, 1}));
    CHECK_FALSE(sys('D', 5)->in_coroot_lattice({0, 0, 0, 0, 1}));
    CHECK(sys('E', 7)->in_coroot_lattice({1, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(sys('E', 7)->in_coroot_lattice({0, 0, 0, 0, 0, 0, 1}));
    // adjoint types have no lattice condition at all
    CHECK(sys('E', 8)->in_coroot_lattice({0, 0, 0, 0, 0, 0, 0, -1}));
    CHECK(sys('F', 4)->in_coroot_lattice({0, 1, 0, 0}));
    CHECK(sys('G', 2)->in_coroot_lattice({1, 0}));
}

TEST_CASE("subdiagram decomposition") {
    auto f4 = sys('F', 4);
    auto comps = f4->components({1, 3, 4});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1});
    CHECK(comps[1] == std::vector<int>{3, 4});

    // removing one end of the double edge leaves classical subsystems
    FiniteType head = f4->classify_component({1, 2, 3});
    CHECK(head.label == TypeLabel::B);
    CHECK(head.rank == 3);
    FiniteType tail = f4->classify_component({2, 3, 4});
    CHECK(tail.label == TypeLabel::C);
    CHECK(tail.rank == 3);
    FiniteType point = f4->classify_component({2});
    CHECK(point.label == TypeLabel::A);
    CHECK(point.rank == 1);

    auto d4 = sys('D', 4);
    FiniteType claw = d4->classify_component({1, 2, 3, 4});
    CHECK(claw.label == TypeLabel::D);
    CHECK(claw.rank == 4);
}

TEST_CASE("highest root within a subdiagram") {
    auto b3 = sys('B', 3);
    int idx = b3->highest_root_in({2, 3});
    CHECK(b3->root(idx).coeffs == std::vector<long long>{0, 1, 2});

    auto a3 = sys('A', 3);
    int top = a3->highest_root_in({1, 2});
    CHECK(a3->root(top).coeffs == std::vector<long long>{1, 1, 0});

    CHECK_THROWS_AS(b3->highest_root_in({0, 2}), schubert::Error);
}

TEST_CASE("root lookup") {
    auto b3 = sys('B', 3);
    CHECK(b3->find_root({1, 2, 2}) == b3->highest_root_index());
    CHECK(b3->find_root({1, 0, 1}) == -1);
    CHECK_THROWS_AS(b3->root_index_checked({1, 0, 1}), schubert::NotARoot);

    for (int i = 1; i <= 3; ++i) {
        const auto& r = b3->root(b3->simple_root_index(i));
        for (int j = 1; j <= 3; ++j) {
            CHECK(r.coeffs[static_cast<std::size_t>(j - 1)] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("reflection tables cover every root") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}}) {
        auto rs = sys(t, r);
        const auto& table = rs->reflection_table();
        REQUIRE(table.size() == static_cast<std::size_t>(rs->root_count()));
        for (const auto& row : table) CHECK_FALSE(row.empty());
    }
}

TEST_CASE("systems are cached") {
    CHECK(sys('B', 3).get() == sys('B', 3).get());
    CHECK(sys('B', 3).get() != sys('B', 4).get());
}
