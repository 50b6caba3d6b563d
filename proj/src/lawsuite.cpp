#include "dlcat/lawsuite.hpp"

#include <chrono>

#include "dlcat/random.hpp"
#include "dlcat/rig.hpp"

namespace dlc::laws {

const std::vector<LawInfo>& law_table() {
  static const std::vector<LawInfo> table = {
      {LawId::L1, "L1", "coalgebra modality",
       "Coalgebra modality: ! is a comonad and each !A is a cocommutative comonoid (Delta, e)"},
      {LawId::L2, "L2", "constant rule", "Constant Rule: d;e = 0"},
      {LawId::L3, "L3", "leibniz rule", "Leibniz Rule: d;Delta = (Delta x 1);(1 x d) + (Delta x 1);(1 x sigma);(d x 1)"},
      {LawId::L4, "L4", "linear rule", "Linear Rule: d;eps = e x 1"},
      {LawId::L5, "L5", "chain rule", "Chain Rule: D[g o f](x, v) = D[g](f(x), D[f](x, v)) on coKleisli maps"},
      {LawId::L6, "L6", "interchange rule", "Interchange Rule: (d x 1);d = (1 x sigma);(d x 1);d"},
      {LawId::L7, "L7", "deriving/coderiving identity",
       "Deriving and coderiving transformations: d;d° = (d° x 1);(1 x sigma);(d x 1) + 1"},
      {LawId::L8, "L8", "K and J", "Definition of K and J: K = d°;d + !(0), J = d°;d + 1"},
      {LawId::L9, "L9", "K and J intertwinings",
       "K !(0) = !(0) = !(0) K, likewise J; K d° = d° (J x 1); d K = (J x 1) d"},
      {LawId::L10, "L10", "monoidal unit laws",
       "Monoidal unit: (m_R x 1) m_{R,A} = 1, m_R eps_R = 1, m_R e_R = 1, m_R Delta_R = m_R x m_R, m_R d°_R = m_R"},
      {LawId::L11, "L11", "K and the monoidal maps",
       "(K_A x 1) m_{A,B} = m_{A,B} K_{A x B} = (1 x K_B) m_{A,B}, at unit components"},
      {LawId::L12, "L12", "second fundamental theorem at the unit",
       "Integration at the unit: s_R d_R + !(0) = 1_{!R}"},
      {LawId::L13, "L13", "integral and J at the unit", "Integral and J at the unit: s_R J_R = d°_R"},
      {LawId::L14, "L14", "inverse of J at the unit",
       "J_R is an isomorphism with inverse J^-1_R = (m_R x 1)(s_R x 1) m_{R,R}, and s_R = d°_R J^-1_R"},
      {LawId::L15, "L15", "inverse of K at the unit",
       "K_R is an isomorphism with inverse K^-1_R = s_R J^-1_R d_R + !(0), and s_R = K^-1_R d°_R"},
      {LawId::L16, "L16", "antiderivatives from the unit",
       "Antiderivatives exist if and only if for the monoidal unit R there is a map s_R with s_R d_R + !(0) = 1"},
      {LawId::L17, "L17", "reconstruction from the unit",
       "K^-1_A, J^-1_A and s_A = (m_R x 1)(s_R x d°)(m_{R,A} x 1) built from s_R agree with the direct operators"},
      {LawId::L18, "L18", "second fundamental theorem",
       "Second Fundamental Theorem of Calculus: s_A d_A + !(0) = 1"},
      {LawId::L19, "L19", "first fundamental theorem at the unit",
       "First Fundamental Theorem of Calculus at the unit: d_R s_R = 1"},
      {LawId::L20, "L20", "poincare condition",
       "Poincare Condition: if (d x 1) f = (1 x sigma)(d x 1) f then d s f = f"},
      {LawId::L21, "L21", "taylor property",
       "The deriving transformation d is Taylor: d f = d g implies f + !(0) g = g + !(0) f"},
      {LawId::L22, "L22", "seely isomorphism", "Seely isomorphism chi: !(A x B) -> !A x !B is a natural isomorphism"},
      {LawId::L23, "L23", "naturality of d", "d is a natural transformation: (!f x f);d = d;!f"},
      {LawId::L24, "L24", "idempotent specialization",
       "Over an additively idempotent semiring the antiderivative integral is precisely the coderiving "
       "transformation: s = d°"},
  };
  return table;
}

const LawInfo& law_info(LawId id) { return law_table().at(static_cast<std::size_t>(id) - 1); }

std::optional<LawId> parse_law_id(std::string_view code) {
  for (const auto& info : law_table())
    if (info.code == code) return info.id;
  return std::nullopt;
}

std::vector<LawId> all_laws() {
  std::vector<LawId> ids;
  for (const auto& info : law_table()) ids.push_back(info.id);
  return ids;
}

LawReport run_law(LawId law, const ModelBinding& binding, std::size_t cases, std::uint64_t seed) {
  const LawInfo& info = law_info(law);
  LawReport rep;
  rep.id = info.code;
  rep.citation = info.citation;
  rep.model = binding.model;
  rep.exact = binding.exact;

  if (!binding.mask.count(law)) {
    rep.status = LawStatus::skipped;
    auto it = binding.unsupported.find(law);
    rep.skip_reason = it != binding.unsupported.end() ? it->second : "not in this model's applicability mask";
    return rep;
  }
  auto check = binding.checks.find(law);
  if (check == binding.checks.end())
    throw UnboundOperator(binding.model + ": law " + info.code + " is in the mask but has no check bound");

  const auto start = std::chrono::steady_clock::now();
  try {
    LawOutcome outcome = check->second(cases, mix_seed(seed, static_cast<std::uint64_t>(law)));
    rep.cases = outcome.cases;
    if (outcome.counterexample) {
      rep.status = LawStatus::fail;
      rep.counterexample = std::move(outcome.counterexample);
    }
  } catch (const NotInvertible& e) {
    rep.status = LawStatus::skipped;
    rep.skip_reason = std::string("requires inverses of positive integers: ") + e.what();
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<LawReport> run_suite(const ModelBinding& binding, std::size_t cases, std::uint64_t seed) {
  std::vector<LawReport> reports;
  for (LawId id : all_laws()) reports.push_back(run_law(id, binding, cases, seed));
  return reports;
}

bool all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports)
    if (r.status == LawStatus::fail) return false;
  return true;
}

const std::vector<std::string>& semiring_names() {
  static const std::vector<std::string> names = {"nonneg-rational", "rational", "boolean", "natural"};
  return names;
}

}  // namespace dlc::laws
