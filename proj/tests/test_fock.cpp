#include <cmath>
#include <random>

#include <doctest.h>

#include "qhopf/fock.hpp"
#include "qhopf/serialize.hpp"

#include <nlohmann/json.hpp>

using namespace qhopf;

namespace {

Operator random_operator(const SpaceDescriptor& space, double scale, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(space.total_dim, space.total_dim);
    for (long i = 0; i < space.total_dim; ++i)
        for (long j = 0; j < space.total_dim; ++j)
            m(i, j) = Complex(dist(rng), dist(rng));
    m *= scale / std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
    return {space, std::move(m)};
}

}  // namespace

TEST_CASE("make_space dimensions and layout") {
    CHECK(make_space({{"k1", 1}}).total_dim == 2);
    CHECK(make_space({{"k1", 15}, {"k2", 15}}).total_dim == 256);
    CHECK_THROWS_AS(make_space({{"k1", 3}, {"k1", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_space({{"k1", 0}}), std::invalid_argument);

    // row-major: first factor slowest
    SpaceDescriptor s = make_space({{"a", 2}, {"b", 3}});
    CHECK(s.flat_index({1, 2}) == 1 * 4 + 2);
    CHECK(s.occupations(6) == std::vector<int>{1, 2});
}

TEST_CASE("annihilator matrix elements") {
    SpaceDescriptor s = make_space({{"k", 2}});
    Operator a = annihilator(s, "k");
    CHECK(a.matrix(0, 1).real() == doctest::Approx(1.0));
    CHECK(a.matrix(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(annihilator(s, "nope"), std::invalid_argument);
}

TEST_CASE("truncated ccr deviates only in the top level") {
    // hand computation at cutoff 2: [a, a+] = diag(1, 1, -2)
    SpaceDescriptor s = make_space({{"k", 2}});
    Operator c = commutator(annihilator(s, "k"), creator(s, "k"));
    CHECK(std::abs(c.matrix(0, 0) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(c.matrix(1, 1) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(c.matrix(2, 2) - Complex(-2.0)) < 1e-14);

    for (int cutoff : {2, 5, 9}) {
        SpaceDescriptor sp = make_space({{"k", cutoff}});
        Operator cc = commutator(annihilator(sp, "k"), creator(sp, "k"));
        for (int m = 0; m < cutoff; ++m)
            for (int n = 0; n < cutoff; ++n)
                CHECK(std::abs(cc.matrix(m, n) - (m == n ? Complex(1.0) : Complex(0.0))) <
                      1e-14);
    }
}

TEST_CASE("adjoint is an involution") {
    SpaceDescriptor s = make_space({{"k", 3}});
    Operator a = annihilator(s, "k");
    CHECK(max_abs((adjoint(adjoint(a)) - a).matrix) == 0.0);
    Operator iI = Complex(0.0, 1.0) * identity_op(s);
    CHECK(max_abs((adjoint(iI) + iI).matrix) < 1e-15);
}

TEST_CASE("twisted adjoint") {
    SpaceDescriptor s = make_space({{"1", 4}, {"2", 4}});
    Operator a1 = annihilator(s, "1");
    Operator a2 = annihilator(s, "2");

    SUBCASE("swap then conjugate") {
        CHECK(max_abs((twisted_adjoint(a1) - creator(s, "2")).matrix) < 1e-14);
    }
    SUBCASE("involution") {
        Operator x = a1 + Complex(0.0, 0.3) * (a2 * a2);
        CHECK(max_abs((twisted_adjoint(twisted_adjoint(x)) - x).matrix) < 1e-14);
    }
    SUBCASE("termwise on the Bogoliubov combination") {
        double th = 0.7;
        Operator x = std::exp(th) * a1 - std::exp(-th) * a2;
        Operator want = std::exp(th) * creator(s, "2") - std::exp(-th) * creator(s, "1");
        CHECK(max_abs((twisted_adjoint(x) - want).matrix) < 1e-14);
    }
    SUBCASE("antihomomorphism") {
        Operator x = random_operator(s, 1.0, 11);
        Operator y = random_operator(s, 1.0, 22);
        Operator lhs = twisted_adjoint(x * y);
        Operator rhs = twisted_adjoint(y) * twisted_adjoint(x);
        CHECK(max_abs((lhs - rhs).matrix) < 1e-12);
    }
    SUBCASE("rejects non-two-factor spaces") {
        SpaceDescriptor one = make_space({{"k", 3}});
        CHECK_THROWS_AS(twisted_adjoint(annihilator(one, "k")), std::invalid_argument);
        SpaceDescriptor uneven = make_space({{"1", 3}, {"2", 4}});
        CHECK_THROWS_AS(twisted_adjoint(annihilator(uneven, "1")), std::invalid_argument);
    }
}

TEST_CASE("embed") {
    SpaceDescriptor two = make_space({{"1", 3}, {"2", 3}});
    SpaceDescriptor one = make_space({{"1", 3}});
    Operator a = annihilator(one, "1");

    CHECK(max_abs((embed(a, two, 0) - annihilator(two, "1")).matrix) == 0.0);
    CHECK(max_abs((embed(identity_op(one), two, 1) - identity_op(two)).matrix) == 0.0);

    // operators on distinct factors commute
    Operator c = commutator(annihilator(two, "1"), creator(two, "2"));
    CHECK(max_abs(c.matrix) == 0.0);

    CHECK_THROWS_AS(embed(a, two, 5), std::invalid_argument);
}

TEST_CASE("matrix_exp") {
    SpaceDescriptor s = make_space({{"k", 4}});
    SUBCASE("zero and diagonal") {
        Operator z{s, Matrix::Zero(5, 5)};
        CHECK(max_abs((matrix_exp(z) - identity_op(s)).matrix) == 0.0);
        Matrix d = Matrix::Zero(5, 5);
        for (int i = 0; i < 5; ++i) d(i, i) = Complex(0.1 * i, -0.2 * i);
        Operator ed = matrix_exp({s, d});
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(ed.matrix(i, i) - std::exp(d(i, i))) < 1e-14);
    }
    SUBCASE("displacement vs 60-term Taylor oracle") {
        SpaceDescriptor sp = make_space({{"k", 30}});
        Operator x = 0.5 * (creator(sp, "k") - annihilator(sp, "k"));
        Vector v0 = Vector::Zero(sp.total_dim);
        v0(0) = 1.0;
        Vector taylor = v0, term = v0;
        for (int k = 1; k <= 60; ++k) {
            term = (x.matrix * term) / double(k);
            taylor += term;
        }
        Vector via_exp = matrix_exp(x).matrix * v0;
        CHECK((via_exp - taylor).cwiseAbs().maxCoeff() < 1e-10);
        StateVector applied = apply_exp(x, {sp, v0, true});
        CHECK((applied.amplitudes - taylor).cwiseAbs().maxCoeff() < 1e-10);
    }
    SUBCASE("exp(X) exp(-X) = 1 for ||X|| <= 5") {
        SpaceDescriptor sp = make_space({{"1", 3}, {"2", 3}});
        for (unsigned seed : {1u, 2u, 3u, 4u}) {
            Operator x = random_operator(sp, 5.0, seed);
            Operator prod = matrix_exp(x) * matrix_exp(Complex(-1.0) * x);
            CHECK(max_abs((prod - identity_op(sp)).matrix) < 1e-10);
        }
    }
}

TEST_CASE("inner and expectation") {
    SpaceDescriptor s = make_space({{"k", 2}});
    Vector v = Vector::Zero(3), w = Vector::Zero(3);
    v(0) = Complex(0.0, 1.0);
    w(0) = 2.0;
    // conjugate-linear in the first argument
    CHECK(inner({s, v, false}, {s, w, false}) == Complex(0.0, -2.0));
}

TEST_CASE("partial trace") {
    SUBCASE("product state stays pure") {
        SpaceDescriptor s = make_space({{"1", 1}, {"2", 1}});
        Vector v = Vector::Zero(4);
        v(s.flat_index({0, 0})) = 1.0;
        DensityMatrix red = partial_trace(StateVector{s, v, true}, {0});
        CHECK(std::abs(red.matrix(0, 0) - Complex(1.0)) < 1e-14);
        CHECK(von_neumann_entropy(red) == doctest::Approx(0.0));
    }
    SUBCASE("Bell pair is maximally mixed") {
        SpaceDescriptor s = make_space({{"1", 1}, {"2", 1}});
        Vector v = Vector::Zero(4);
        v(s.flat_index({0, 1})) = 1.0 / std::sqrt(2.0);
        v(s.flat_index({1, 0})) = 1.0 / std::sqrt(2.0);
        DensityMatrix red = partial_trace(StateVector{s, v, true}, {0});
        CHECK(std::abs(red.matrix(0, 0) - Complex(0.5)) < 1e-14);
        CHECK(std::abs(red.matrix(1, 1) - Complex(0.5)) < 1e-14);
        CHECK(von_neumann_entropy(red) == doctest::Approx(std::log(2.0)));
    }
    SUBCASE("squeezed vacuum reduces to the thermal-form diagonal") {
        double th = 0.5;
        int cutoff = 25;
        SpaceDescriptor s = make_space({{"1", cutoff}, {"2", cutoff}});
        Vector v = Vector::Zero(s.total_dim);
        for (int n = 0; n <= cutoff; ++n)
            v(s.flat_index({n, n})) = std::pow(std::tanh(th), n) / std::cosh(th);
        v /= v.norm();
        DensityMatrix red = partial_trace(StateVector{s, v, true}, {0});
        double c2 = std::cosh(th) * std::cosh(th);
        for (int n = 0; n <= 6; ++n) {
            double p = std::pow(std::tanh(th), 2 * n) / c2;
            CHECK(std::abs(red.matrix(n, n).real() - p) < 1e-12);
        }
        CHECK(std::abs(red.matrix.trace() - Complex(1.0)) < 1e-12);

        double s2 = std::sinh(th) * std::sinh(th);
        double closed = c2 * std::log(c2) - s2 * std::log(s2);
        CHECK(von_neumann_entropy(red) == doctest::Approx(closed).epsilon(1e-10));
        CHECK(closed == doctest::Approx(0.65946).epsilon(1e-4));
    }
    SUBCASE("rejects empty and full keep sets") {
        SpaceDescriptor s = make_space({{"1", 1}, {"2", 1}});
        Vector v = Vector::Zero(4);
        v(0) = 1.0;
        StateVector state{s, v, true};
        CHECK_THROWS_AS(partial_trace(state, {}), std::invalid_argument);
        CHECK_THROWS_AS(partial_trace(state, {0, 1}), std::invalid_argument);
    }
}

TEST_CASE("von_neumann_entropy basics") {
    SpaceDescriptor s = make_space({{"k", 1}});
    Matrix half = Matrix::Zero(2, 2);
    half(0, 0) = 0.5;
    half(1, 1) = 0.5;
    CHECK(von_neumann_entropy(make_density_matrix(s, half)) ==
          doctest::Approx(std::log(2.0)));
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(make_density_matrix(s, bad), std::invalid_argument);
}

TEST_CASE("truncation tail bookkeeping") {
    // tanh^2(0.5) = 0.2135; the tail crosses 1e-12 between cutoffs 16 and 17
    CHECK(truncation_tail(0.5, 17) < 1e-12);
    CHECK(truncation_tail(0.5, 16) > 1e-12);
    CHECK(cutoff_for_tail(0.5, 1e-12) == 17);
}

TEST_CASE("json round trip") {
    SpaceDescriptor s = make_space({{"1", 2}, {"2", 2}});
    Operator a = annihilator(s, "1") + Complex(0.0, 0.5) * creator(s, "2");
    Operator back = operator_from_json(to_json(a));
    CHECK(back.space == a.space);
    CHECK(max_abs((back - a).matrix) == 0.0);

    Vector v = Vector::Zero(s.total_dim);
    v(3) = Complex(0.1, -0.2);
    StateVector state{s, v, false};
    StateVector sback = state_from_json(to_json(state));
    CHECK((sback.amplitudes - v).cwiseAbs().maxCoeff() == 0.0);
}
