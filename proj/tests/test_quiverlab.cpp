#include "doctest.h"

#include "qring/qnumbers.hpp"
#include "qring/quadratic_field.hpp"
#include "quiverlab/flag_type.hpp"
#include "quiverlab/quiver.hpp"

#include "flag_oracles.hpp"
#include "test_quivers.hpp"

using namespace quiverlab;

TEST_CASE("quiver construction and derived data") {
    const auto q = mixed_quiver(2);
    CHECK(q.loop_count("1") == 0);
    CHECK(q.loop_count("2") == 2);
    CHECK(q.is_real("1"));
    CHECK(q.is_imaginary("2"));
    CHECK(q.imaginary_vertices() == std::vector<std::string>{"2"});
    CHECK_THROWS_AS(q.vertex_index("3"), quiver_error);
    CHECK_THROWS_AS(Quiver({"1", "1"}, {}), quiver_error);
    CHECK_THROWS_AS(Quiver({"1"}, {{"1", "2"}}), quiver_error);
}

TEST_CASE("euler and symmetric forms") {
    const DimVec e1{{"1", 1}}, e2{{"2", 1}};
    CHECK(euler_form(a2_quiver(), e1, e2) == -1);
    CHECK(euler_form(jordan_quiver(), e1, e1) == 0);
    CHECK(euler_form(two_loop_quiver(), e1, e1) == -1);

    CHECK(symmetric_form(a2_quiver(), e1, e2) == -1);
    CHECK(symmetric_form(jordan_quiver(), e1, e1) == 0);
    CHECK(symmetric_form(two_loop_quiver(), e1, e1) == -2);

    CHECK_THROWS_AS(euler_form(a2_quiver(), DimVec{{"x", 1}}, e2), quiver_error);

    // Orientation invariance: flipping any non-loop arrow preserves (a,b).
    const auto q = mixed_quiver(1);
    const auto flipped = q.flip_arrow(0);
    for (const auto& a : {DimVec{{"1", 2}}, DimVec{{"1", 1}, {"2", 1}}, DimVec{{"2", 3}}})
        for (const auto& b : {DimVec{{"1", 1}}, DimVec{{"2", 2}}, DimVec{{"1", 1}, {"2", 1}}})
            CHECK(symmetric_form(q, a, b) == symmetric_form(flipped, a, b));
}

TEST_CASE("cartan matrices") {
    const auto a2 = cartan_matrix(a2_quiver());
    CHECK(a2.entries == std::vector<std::vector<long>>{{2, -1}, {-1, 2}});
    CHECK(a2.real_tag == std::vector<bool>{true, true});

    const auto mx = cartan_matrix(mixed_quiver(1));
    CHECK(mx.entries == std::vector<std::vector<long>>{{2, -1}, {-1, 0}});
    CHECK(mx.real_tag == std::vector<bool>{true, false});

    const auto tl = cartan_matrix(two_loop_quiver());
    CHECK(tl.entries == std::vector<std::vector<long>>{{-2}});
    CHECK_FALSE(tl.real_tag[0]);

    // Invariants: symmetric, diagonal 2 - 2 l_i, off-diagonals <= 0.
    for (const auto& q : {jordan_quiver(), two_loop_quiver(), a2_quiver(), mixed_quiver(2)}) {
        const auto c = cartan_matrix(q);
        for (int i = 0; i < c.size(); ++i) {
            CHECK(c.at(i, i) == 2 - 2 * q.loop_count(q.vertices()[static_cast<size_t>(i)]));
            for (int j = 0; j < c.size(); ++j) {
                CHECK(c.at(i, j) == c.at(j, i));
                if (i != j) CHECK(c.at(i, j) <= 0);
            }
        }
    }
}

TEST_CASE("approximate equivalence of Cartan matrices") {
    const auto c1 = cartan_matrix(mixed_quiver(1));
    const auto c2 = cartan_matrix(mixed_quiver(2));
    CHECK(approx_equivalent(c1, c2));
    CHECK(approx_equivalent(c1, c1));

    // Real vertex vs one-loop vertex at the same index: tags differ.
    const auto real2 = cartan_matrix(Quiver({"1", "2"}, {{"1", "2"}}));
    CHECK_FALSE(approx_equivalent(real2, c1));

    const auto other = cartan_matrix(Quiver({"a"}, {{"a", "a"}}));
    CHECK_THROWS_AS(approx_equivalent(c1, other), quiver_error);
}

TEST_CASE("bridge map") {
    const auto q = mixed_quiver(1);   // 1 real, 2 imaginary
    const FlagType f{{"2"}, {2}};
    const auto b = bridge_type(q, f);
    CHECK(b == FlagType{{"2", "2"}, {1, 1}});

    const FlagType r{{"1"}, {3}};
    CHECK(bridge_type(q, r) == r);

    const FlagType rs{{"1", "2"}, {2, 3}};
    CHECK(bridge_type(q, rs) == FlagType{{"1", "2", "2", "2"}, {2, 1, 1, 1}});

    // Idempotent, degree preserving, output full-flag.
    for (const auto& f2 : {f, r, rs}) {
        const auto b2 = bridge_type(q, f2);
        CHECK(bridge_type(q, b2) == b2);
        CHECK(degree(b2) == degree(f2));
        CHECK(is_full_flag(q, b2));
    }
}

TEST_CASE("flag type enumeration") {
    const auto jordan = jordan_quiver();
    const auto types = enumerate_flag_types(jordan, {{"1", 2}}, FlagMode::all);
    REQUIRE(types.size() == 2);
    CHECK(types[0] == FlagType{{"1"}, {2}});
    CHECK(types[1] == FlagType{{"1", "1"}, {1, 1}});

    const auto full = enumerate_flag_types(jordan, {{"1", 2}}, FlagMode::full_flag);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == FlagType{{"1", "1"}, {1, 1}});

    const auto a2types = enumerate_flag_types(a2_quiver(), {{"1", 1}, {"2", 1}}, FlagMode::all);
    REQUIRE(a2types.size() == 2);
    CHECK(a2types[0] == FlagType{{"1", "2"}, {1, 1}});
    CHECK(a2types[1] == FlagType{{"2", "1"}, {1, 1}});

    // Degree zero: the empty type only.
    const auto empty = enumerate_flag_types(jordan, {}, FlagMode::all);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].length() == 0);

    // For a loop-free quiver the two modes coincide.
    const DimVec nu{{"1", 2}, {"2", 1}};
    CHECK(enumerate_flag_types(a2_quiver(), nu, FlagMode::all) ==
          enumerate_flag_types(a2_quiver(), nu, FlagMode::full_flag));
}

TEST_CASE("flag dimensions") {
    const auto jordan = jordan_quiver();
    const auto d = flag_dims(jordan, FlagType{{"1", "1"}, {1, 1}});
    CHECK(d.dim_flag == 1);
    CHECK(d.dim_tilde == 2);
    CHECK(d.point_count == qring::quantum_integer(2));

    const auto d2 = flag_dims(a2_quiver(), FlagType{{"2", "1"}, {1, 1}});
    CHECK(d2.dim_flag == 0);
    CHECK(d2.dim_tilde == 0);

    const auto d3 = flag_dims(two_loop_quiver(), FlagType{{"1"}, {3}});
    CHECK(d3.dim_flag == 0);
    CHECK(d3.dim_tilde == 0);
}

TEST_CASE("induction dimensions") {
    const DimVec e1{{"1", 1}}, e2{{"2", 1}};
    const auto jd = induction_dims(jordan_quiver(), e1, e1);
    CHECK(jd.d2 == 2);
    CHECK(jd.d1 == 4);

    const auto ad = induction_dims(a2_quiver(), e1, e2);
    CHECK(ad.d2 == 2);
    CHECK(ad.d1 == 3);

    const auto zd = induction_dims(a2_quiver(), e1, {});
    CHECK(zd.d1 == zd.d2);
}

TEST_CASE("extended Cartan matrices") {
    const auto jc = extend_cartan(jordan_quiver(), 3);
    CHECK(jc.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(jc.at(i, j) == 0);

    const auto tc = extend_cartan(two_loop_quiver(), 2);
    CHECK(tc.labels == std::vector<std::string>{"1:1", "1:2"});
    CHECK(tc.at(0, 1) == -4);
    CHECK(tc.at(1, 1) == -8);

    const auto mc = extend_cartan(mixed_quiver(1), 3);
    CHECK(mc.labels[0] == "1");
    CHECK(mc.real_tag[0]);
    for (int n = 1; n <= 3; ++n)
        CHECK(mc.at(0, mc.index_of("2:" + std::to_string(n))) == -n);

    CHECK_THROWS_AS(extend_cartan(jordan_quiver(), 0), quiver_error);
}

TEST_CASE("positive part quiver") {
    CHECK(jordan_quiver().positive_part().arrows().empty());
    const auto m = mixed_quiver(1).positive_part();
    REQUIRE(m.arrows().size() == 1);
    CHECK(m.arrows()[0] == Arrow{"1", "2"});
    const auto a2 = a2_quiver();
    CHECK(a2.positive_part().arrows() == a2.arrows());
}

TEST_CASE("flag variety point counts match brute force") {
    // point_count at v = sqrt(q), times sqrt(q)^{dim_flag}, is |F(F_q)|;
    // and |F~(F_q)| = |F(F_q)| * q^{dim_tilde - dim_flag}.
    for (int q : {2, 3}) {
        for (const auto& quiver : {jordan_quiver(), a2_quiver(), mixed_quiver(1)}) {
            std::vector<DimVec> nus;
            if (quiver.vertex_count() == 1) {
                nus = {{{"1", 2}}, {{"1", 3}}};
            } else {
                nus = {{{"1", 1}, {"2", 1}}, {{"1", 2}, {"2", 1}}, {{"1", 1}, {"2", 2}}};
            }
            for (const auto& nu : nus) {
                const auto points = oracles::all_points(quiver, quiver.dense(nu), q);
                for (const auto& f : enumerate_flag_types(quiver, nu, FlagMode::all)) {
                    const auto d = flag_dims(quiver, f);
                    const auto flags = oracles::all_flags(quiver, f, q);

                    const auto predicted = qring::evaluate_at_sqrt_q(d.point_count, q) *
                                           qring::QuadraticFieldElement::sqrt_power(q, d.dim_flag);
                    CHECK(predicted.surd_part() == 0);
                    CHECK(predicted.rational_part() == qring::Rational(static_cast<long>(flags.size())));

                    long tilde = 0;
                    for (const auto& chain : flags)
                        for (const auto& x : points)
                            if (oracles::is_stable(quiver, chain, x, q)) ++tilde;
                    qring::Int expected = qring::Int(static_cast<long>(flags.size())) *
                        boost::multiprecision::pow(qring::Int(q), static_cast<unsigned>(d.dim_tilde - d.dim_flag));
                    CHECK(qring::Int(tilde) == expected);
                }
            }
        }
    }
}
