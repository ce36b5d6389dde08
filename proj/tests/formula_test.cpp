#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qlogic/error.hpp"
#include "qlogic/formula.hpp"
#include "qlogic/scenario.hpp"
#include "support.hpp"

namespace qlogic {
namespace {

Formula A(const char* name) { return Formula::atom(name); }

Formula RandomFormula(std::mt19937_64& rng, int depth) {
  static const char* kNames[] = {"X", "X1", "X2", "Y_0", "long_name9"};
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 0 : 4);
  switch (pick(rng)) {
    case 0: return Formula::atom(kNames[std::uniform_int_distribution<int>(0, 4)(rng)]);
    case 1: return Formula::negation(RandomFormula(rng, depth - 1));
    case 2: return Formula::conjunction(RandomFormula(rng, depth - 1), RandomFormula(rng, depth - 1));
    case 3: return Formula::disjunction(RandomFormula(rng, depth - 1), RandomFormula(rng, depth - 1));
    default: return Formula::exclusive(RandomFormula(rng, depth - 1), RandomFormula(rng, depth - 1));
  }
}

std::size_t ParseErrorOffset(std::string_view text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

TEST(ParseFormula, Atom) { EXPECT_EQ(parse_formula("X"), A("X")); }

TEST(ParseFormula, ExclusiveDisjunctionStructure) {
  const Formula f = parse_formula("(X1 | X2) & !(X1 & X2)");
  const Formula expected = Formula::conjunction(Formula::disjunction(A("X1"), A("X2")),
                                                Formula::negation(Formula::conjunction(A("X1"), A("X2"))));
  EXPECT_EQ(f, expected);
}

TEST(ParseFormula, Precedence) {
  // ! > & > ^ > |
  EXPECT_EQ(parse_formula("a | b ^ c & !d"),
            Formula::disjunction(A("a"), Formula::exclusive(A("b"), Formula::conjunction(A("c"), Formula::negation(A("d"))))));
  EXPECT_EQ(parse_formula("a & b | c"), Formula::disjunction(Formula::conjunction(A("a"), A("b")), A("c")));
  EXPECT_EQ(parse_formula("a | b | c"), Formula::disjunction(Formula::disjunction(A("a"), A("b")), A("c")));
  EXPECT_EQ(parse_formula("  a\t&\n(b|c) "), Formula::conjunction(A("a"), Formula::disjunction(A("b"), A("c"))));
}

TEST(ParseFormula, UnicodeConnectives) {
  EXPECT_EQ(parse_formula("¬X1 ∧ X2 ∨ X1 ⊻ X2"), parse_formula("!X1 & X2 | X1 ^ X2"));
}

TEST(ParseFormula, ErrorOffsets) {
  EXPECT_EQ(ParseErrorOffset("X1 &"), 4u);
  EXPECT_EQ(ParseErrorOffset("(X1 | X2"), 8u);
  EXPECT_EQ(ParseErrorOffset("X1 $ X2"), 3u);
  EXPECT_EQ(ParseErrorOffset(""), 0u);
  EXPECT_EQ(ParseErrorOffset("X1 X2"), 3u);
  EXPECT_EQ(ParseErrorOffset("1X"), 0u);
}

TEST(ParseFormula, ExpectedTokens) {
  try {
    parse_formula("X1 &");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"atom", "'('", "'!'"}));
  }
}

TEST(ParseFormula, DepthLimit) {
  std::string ok, deep;
  for (int i = 0; i < 63; ++i) ok += "!";
  ok += "X";
  EXPECT_EQ(parse_formula(ok).depth(), 64u);
  deep = "!" + ok;
  EXPECT_THROW(parse_formula(deep), ParseError);
  EXPECT_THROW(parse_formula(std::string(100000, '(') + "X"), ParseError);
}

TEST(PrintFormula, RoundTripsRandomTrees) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const Formula f = RandomFormula(rng, 1 + trial % 8);
    const std::string text = print_formula(f);
    EXPECT_EQ(parse_formula(text), f) << text;
    EXPECT_EQ(print_formula(parse_formula(text)), text);
  }
}

TEST(PrintFormula, MinimalParentheses) {
  EXPECT_EQ(print_formula(parse_formula("((a | b)) & !(a & b)")), "(a | b) & !(a & b)");
  EXPECT_EQ(print_formula(parse_formula("a | (b | c)")), "a | (b | c)");
  EXPECT_EQ(print_formula(parse_formula("(a | b) | c")), "a | b | c");
}

// Scenario evaluation -----------------------------------------------------------


Scenario TwoSlit(std::string_view policy) {
  ScenarioDocument doc = parse_scenario(R"({
    "dimension": 2,
    "atoms": {"X1": [[[1,0],[0,0]]], "X2": [[[0,0],[1,0]]]},
    "state": [[0.6,0],[0.8,0]],
    "assignment": {"X1": 0.5, "X2": 0.5},
    "policy": "super"
  })");
  return with_policy(std::move(doc.scenario), policy, doc.assignment);
}

TEST(BindAndEvaluate, SupervaluationExclusiveDisjunction) {
  const auto r = bind_and_evaluate(parse_formula("(X1 | X2) & !(X1 & X2)"), TwoSlit("super"));
  EXPECT_EQ(r.truth, TruthValue::degree(1));
  ASSERT_TRUE(r.lattice_element);
  EXPECT_TRUE(r.lattice_element->is_top());
  ASSERT_TRUE(r.probability);
  EXPECT_EQ(*r.probability, 1.0);
  EXPECT_EQ(bind_and_evaluate(parse_formula("X1 ^ X2"), TwoSlit("super")).truth, TruthValue::degree(1));
  EXPECT_FALSE(bind_and_evaluate(parse_formula("X1"), TwoSlit("super")).truth.defined());
}

TEST(BindAndEvaluate, ExcludedMiddleUnderBorn) {
  const auto r = bind_and_evaluate(parse_formula("X1 | !X1"), TwoSlit("born"));
  EXPECT_EQ(r.truth, TruthValue::degree(1));
}

TEST(BindAndEvaluate, KleeneTable) {
  const auto r = bind_and_evaluate(parse_formula("(X1 | X2) & !(X1 & X2)"), TwoSlit("kleene3"));
  EXPECT_EQ(r.truth, TruthValue::degree(0.5));
  EXPECT_FALSE(r.probability);
  EXPECT_FALSE(r.lattice_element);
}

TEST(BindAndEvaluate, UnboundAtom) {
  for (const char* policy : {"born", "kleene3"}) {
    try {
      bind_and_evaluate(parse_formula("X1 & Z"), TwoSlit(policy));
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnboundAtom);
      EXPECT_NE(std::string(e.what()).find("'Z'"), std::string::npos);
    }
  }
}

TEST(BindAndEvaluate, LatticeExcludedMiddleAndNonContradiction) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    Scenario sc;
    sc.dimension = dim;
    sc.atoms.emplace("X", testing::random_subspace(rng, dim));
    sc.state = testing::random_state(rng, dim);
    for (const char* policy : {"born", "super", "bivalent"}) {
      const Scenario s = with_policy(sc, policy, {});
      EXPECT_TRUE(bind_and_evaluate(parse_formula("X | !X"), s).lattice_element->is_top());
      EXPECT_TRUE(bind_and_evaluate(parse_formula("X & !X"), s).lattice_element->is_bottom());
    }
  }
}

TEST(BindAndEvaluate, TableAgreesWithLatticeOnCommutingEigenstates) {
  // Diagonal projectors commute; a basis state is an eigenstate of all of them.
  const std::vector<Formula> formulas{parse_formula("X1 ^ X2"), parse_formula("(X1 | X2) & !(X1 & X2)"),
                                      parse_formula("!X1 | X2 & X3"), parse_formula("X1 ^ X2 ^ X3"),
                                      parse_formula("!(X1 & X3) | (X2 ^ !X1)")};
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const std::size_t n_atoms = dim == 4 ? 2 : 3;
    const std::size_t subsets = std::size_t{1} << dim;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < n_atoms; ++k) combos *= subsets;
    for (std::size_t combo = 0; combo < combos; ++combo) {
      std::vector<std::size_t> masks;
      for (std::size_t k = 0, c = combo; k < n_atoms; ++k, c /= subsets) masks.push_back(c % subsets);
      std::map<std::string, Subspace> atoms;
      for (std::size_t k = 0; k < n_atoms; ++k) {
        std::vector<double> diag(dim);
        for (std::size_t i = 0; i < dim; ++i) diag[i] = (masks[k] >> i) & 1u;
        atoms.emplace("X" + std::to_string(k + 1), Subspace(Projector(ComplexMatrix::diagonal(diag))));
      }
      for (std::size_t basis = 0; basis < dim; ++basis) {
        std::map<std::string, TruthValue> assignment;
        for (std::size_t k = 0; k < n_atoms; ++k)
          assignment.emplace("X" + std::to_string(k + 1), TruthValue::degree((masks[k] >> basis) & 1u));
        Scenario lattice;
        lattice.dimension = dim;
        lattice.atoms = atoms;
        lattice.state = StateVector::basis(dim, basis);
        lattice.policy = ValuationPolicy::born_degree();
        for (const auto& f : formulas) {
          bool uses_missing = false;
          for (const auto& name : f.atoms()) uses_missing = uses_missing || !atoms.contains(name);
          if (uses_missing) continue;
          const TruthValue table = table_value(f, assignment, LogicSystem::Bivalent);
          ASSERT_EQ(bind_and_evaluate(f, lattice).truth, table) << print_formula(f) << " dim " << dim;
        }
      }
    }
  }
}

// Scenario files -----------------------------------------------------------------

TEST(ParseScenario, RejectsUnknownKeys) {
  try {
    parse_scenario(R"({"dimension": 2, "colour": 1})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigInvalid);
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
}

TEST(ParseScenario, FieldDiagnostics) {
  auto message = [](std::string_view text) {
    try {
      parse_scenario(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"dimension": 2, "atoms": {"X": [[[1,0]]]}})").find("atoms.X[0]"), std::string::npos);
  EXPECT_NE(message(R"({"dimension": 2, "state": [[1,0],[1,0]]})").find("state"), std::string::npos);
  EXPECT_NE(message(R"({"policy": "fuzzy"})").find("policy"), std::string::npos);
  EXPECT_NE(message(R"({"assignment": {"X": 2}})").find("assignment.X"), std::string::npos);
  EXPECT_NE(message(R"({"dimension": 2, "atoms": {"X": [[1,0]]}})").find("atoms.X[0]"), std::string::npos);
  EXPECT_NE(message("{").find("malformed"), std::string::npos);
}

TEST(ParseScenario, NullAssignmentIsAGap) {
  const ScenarioDocument doc = parse_scenario(R"({"policy": "kleene3", "assignment": {"X": null, "Y": 1}})");
  EXPECT_FALSE(bind_and_evaluate(parse_formula("X & Y"), doc.scenario).truth.defined());
  EXPECT_EQ(bind_and_evaluate(parse_formula("Y"), doc.scenario).truth, TruthValue::degree(1));
}

TEST(ParseScenario, DimThreeJoinGap) {
  const ScenarioDocument doc = parse_scenario(R"({
    "dimension": 3,
    "atoms": {"X1": [[[1,0],[0,0],[0,0]]], "X2": [[[0,0],[1,0],[0,0]]]},
    "policy": "super"
  })");
  EXPECT_FALSE(bind_and_evaluate(parse_formula("X1 | X2"), doc.scenario).truth.defined());
  EXPECT_EQ(bind_and_evaluate(parse_formula("X1 & X2"), doc.scenario).truth, TruthValue::degree(0));
  EXPECT_FALSE(bind_and_evaluate(parse_formula("X1 | X2"), doc.scenario).probability);
}

}  // namespace
}  // namespace qlogic
