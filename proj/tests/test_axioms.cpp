#include "doctest.h"
#include "lagrel/axioms.hpp"

using namespace lagrel;

namespace {

Q q(const char* text) { return Q::parse(text); }

}  // namespace

TEST_CASE("every axiom family is sound at random parameters") {
    for (Calculus c : {Calculus::GSA, Calculus::GAA, Calculus::GGA, Calculus::GQGA}) {
        std::vector<AxiomResult> results = run_axiom_suite(c, 8, 2024);
        CHECK(results.size() == axiom_table(c).size());
        for (const AxiomResult& r : results) {
            INFO(calculus_name(c), " ", r.name);
            CHECK(r.passed == r.samples);
            CHECK(r.mutant_rejected);
        }
    }
}

TEST_CASE("vacuum laws at fixed circle points") {
    const AxiomFamily& rotation = find_axiom(Calculus::GQGA, "vacuum-phase-rotation");
    CHECK(check_axiom(instantiate(rotation, {q("3/5"), q("4/5")})));
    CHECK(check_axiom(instantiate(rotation, {q("-1"), q("0")})));
    const AxiomFamily& passive = find_axiom(Calculus::GGA, "vacuum-rotation");
    CHECK(check_axiom(instantiate(passive, {q("3/5"), q("4/5")})));
    CHECK(check_axiom(instantiate(passive, {q("5/13"), q("-12/13")})));
}

TEST_CASE("side conditions are enforced") {
    auto kind_of = [](const AxiomFamily& f, std::vector<Q> p) {
        try {
            instantiate(f, p);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalDisagreement;
    };
    CHECK(kind_of(find_axiom(Calculus::GQGA, "vacuum-phase-rotation"), {q("0"), q("1")}) ==
          ErrorKind::SideConditionViolated);
    CHECK(kind_of(find_axiom(Calculus::GQGA, "vacuum-phase-rotation"), {q("1/2"), q("1/2")}) ==
          ErrorKind::SideConditionViolated);
    CHECK(kind_of(find_axiom(Calculus::GSA, "squeeze-inverse"), {q("0")}) == ErrorKind::SideConditionViolated);
    CHECK(kind_of(find_axiom(Calculus::GSA, "grey-fusion"), {q("1")}) == ErrorKind::DimensionMismatch);
    CHECK_THROWS_AS(find_axiom(Calculus::GSA, "no-such-law"), Error);
}

TEST_CASE("mutation controls fail") {
    const AxiomFamily& fusion = find_axiom(Calculus::GSA, "grey-fusion");
    std::vector<Q> p{q("1/2"), q("i"), q("-2"), q("3")};
    CHECK(check_axiom(instantiate(fusion, p)));
    CHECK_FALSE(check_axiom(instantiate_mutant(fusion, p)));
    AxiomInstance swapped = instantiate(fusion, p);
    swapped.rhs = instantiate(fusion, {q("1/2"), q("i"), q("-2"), q("4")}).rhs;
    CHECK_FALSE(check_axiom(swapped));
}
