#include <catch2/catch_amalgamated.hpp>

#include "schubert/polynomial.hpp"

#include <limits>

using schubert::IntPolynomial;
using schubert::q_binomial;

TEST_CASE("construction normalizes trailing zeros") {
    IntPolynomial p({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 0);
    CHECK(p.coeff(99) == 0);

    CHECK(IntPolynomial({0, 0, 0}).is_zero());
    CHECK(IntPolynomial::zero().is_zero());
    CHECK(IntPolynomial::zero().degree() == -1);
    CHECK(IntPolynomial::one() == IntPolynomial({1}));
}

TEST_CASE("monomial and one_minus_power helpers") {
    CHECK(IntPolynomial::monomial(3) == IntPolynomial({0, 0, 0, 1}));
    CHECK(IntPolynomial::monomial(0, 5) == IntPolynomial({5}));
    CHECK(IntPolynomial::one_minus_power(3) == IntPolynomial({1, 0, 0, -1}));
    CHECK(IntPolynomial::one_minus_power(1) == IntPolynomial({1, -1}));
}

TEST_CASE("ring operations") {
    IntPolynomial a({1, 1});
    IntPolynomial b({1, 1, 1});

    CHECK(a + b == IntPolynomial({2, 2, 1}));
    CHECK(b - a == IntPolynomial({0, 0, 1}));
    CHECK(a - a == IntPolynomial::zero());
    CHECK(a * a == IntPolynomial({1, 2, 1}));
    CHECK(a * b == IntPolynomial({1, 2, 2, 1}));
    CHECK(a * IntPolynomial::zero() == IntPolynomial::zero());

    // cancellation in subtraction must renormalize the degree
    CHECK((b - IntPolynomial({0, 0, 1})).degree() == 1);
}

TEST_CASE("dual and palindromic detection") {
    CHECK(IntPolynomial({1, 2, 3}).dual() == IntPolynomial({3, 2, 1}));
    CHECK(IntPolynomial({1, 2, 1}).is_palindromic());
    CHECK_FALSE(IntPolynomial({1, 2, 3}).is_palindromic());
    CHECK(IntPolynomial::one().is_palindromic());
    CHECK(IntPolynomial({1, 1, 2, 1, 1}).is_palindromic());
    CHECK_FALSE(IntPolynomial({1, 1, 1, 2, 1}).is_palindromic());
}

TEST_CASE("all_ones recognizes truncated geometric series") {
    CHECK(IntPolynomial({1, 1, 1, 1}).all_ones());
    CHECK(IntPolynomial::one().all_ones());
    CHECK_FALSE(IntPolynomial({1, 1, 2}).all_ones());
    CHECK_FALSE(IntPolynomial({1, 0, 1}).all_ones());
    CHECK_FALSE(IntPolynomial::zero().all_ones());
}

TEST_CASE("evaluate_at_one sums coefficients") {
    CHECK(IntPolynomial({1, 1, 2, 1, 1}).evaluate_at_one() == 6);
    CHECK(IntPolynomial::zero().evaluate_at_one() == 0);
}

TEST_CASE("divide_exact recovers factors") {
    IntPolynomial a({1, 1});
    IntPolynomial b({1, 1, 1});
    CHECK((a * b).divide_exact(a) == b);
    CHECK((a * b).divide_exact(b) == a);
    CHECK(IntPolynomial::zero().divide_exact(a).is_zero());

    // a remainder is a contract violation, not a rounding issue
    CHECK_THROWS_AS(IntPolynomial({1, 0, 1}).divide_exact(a), schubert::Error);
    CHECK_THROWS_AS(a.divide_exact(IntPolynomial::zero()), schubert::Error);
}

TEST_CASE("gaussian binomials") {
    CHECK(q_binomial(4, 2) == IntPolynomial({1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 1) == IntPolynomial({1, 1, 1}));
    CHECK(q_binomial(5, 0) == IntPolynomial::one());
    CHECK(q_binomial(5, 5) == IntPolynomial::one());
    CHECK(q_binomial(2, 3).is_zero());
    CHECK(q_binomial(-1, 0).is_zero());

    SECTION("pascal recursion with a power shift") {
        for (long long m = 1; m <= 8; ++m) {
            for (long long n = 1; n < m; ++n) {
                IntPolynomial lhs = q_binomial(m, n);
                IntPolynomial rhs =
                    q_binomial(m - 1, n - 1) +
                    IntPolynomial::monomial(static_cast<std::size_t>(n)) * q_binomial(m - 1, n);
                CHECK(lhs == rhs);
            }
        }
    }

    SECTION("palindromic with binomial value at one") {
        CHECK(q_binomial(6, 2).is_palindromic());
        CHECK(q_binomial(7, 3).is_palindromic());
        CHECK(q_binomial(6, 2).evaluate_at_one() == 15);
        CHECK(q_binomial(7, 3).evaluate_at_one() == 35);
    }
}

TEST_CASE("digit rendering") {
    CHECK(IntPolynomial({1, 1, 2, 1, 1}).digits() == "11211");
    CHECK(IntPolynomial::zero().digits() == "0");
    // wide coefficients switch to a comma-separated listing
    CHECK(IntPolynomial({1, 12}).digits() == "1,12");
    CHECK(IntPolynomial({1, -1}).digits() == "1,-1");
}

TEST_CASE("pretty rendering") {
    CHECK(IntPolynomial({1, 2, 1}).pretty() == "1 + 2t + t^2");
    CHECK(IntPolynomial({0, 1}).pretty() == "t");
    CHECK(IntPolynomial::zero().pretty() == "0");
}

TEST_CASE("coefficient overflow is detected") {
    long long big = std::numeric_limits<long long>::max() / 2 + 1;
    IntPolynomial huge({big, big});
    CHECK_THROWS_AS(huge * huge, schubert::Overflow);
    CHECK_THROWS_AS(huge + huge, schubert::Overflow);
}
