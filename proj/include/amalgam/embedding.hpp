#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/group.hpp"
#include "amalgam/morphisms.hpp"
#include "amalgam/products.hpp"

namespace amalgam {

enum class VerdictState { holds, fails, hypothesis_not_met };
enum class Method { definition, characterization, preimage };

const char* verdict_state_name(VerdictState s) noexcept;
const char* method_name(Method m) noexcept;

/// Outcome of one embedding-property decision. `defect` is present exactly
/// for a holding subnormality verdict (0 iff H = G); `witness` carries a
/// counterexample description when the verdict fails.
struct EmbeddingVerdict {
  SubgroupProperty property;
  Method method;
  VerdictState state = VerdictState::fails;
  std::optional<int> defect;
  std::optional<std::string> witness;
  std::optional<elem_t> witness_element;

  bool holds() const { return state == VerdictState::holds; }
  std::string describe() const;
};

/// H^g = H over a generating set of the parent.
EmbeddingVerdict is_normal_definition(const Subgroup& h);
/// [Ui, H] <= Ui ∩ H for i = 1,2.
EmbeddingVerdict is_normal_characterization(const CentralProduct& cp, const Subgroup& h);
/// Normality of ε^{-1}(H) in D via [K, V̄i] <= K ∩ V̄i.
EmbeddingVerdict is_normal_preimage(const CentralProduct& cp, const Subgroup& h);

/// Normal-closure descent H_0 = G, H_{k+1} = <H^{H_k}> = H·[H,H_k]; the
/// chain realizes the minimal defect.
EmbeddingVerdict subnormal_defect_oracle(const Subgroup& h);
/// [Ui, H, ...r..., H] <= Ui ∩ H for i = 1,2; certifies defect <= r.
EmbeddingVerdict is_subnormal_characterization(const CentralProduct& cp, const Subgroup& h,
                                               unsigned r);
/// Minimal r satisfying the iterated-commutator condition, as a verdict
/// (H = G short-circuits to defect 0).
EmbeddingVerdict subnormal_characterization_scan(const CentralProduct& cp, const Subgroup& h);
/// Defect oracle applied to ε^{-1}(H) inside D.
EmbeddingVerdict is_subnormal_preimage(const CentralProduct& cp, const Subgroup& h);

/// g ∈ <H, H^g> for every g.
EmbeddingVerdict is_abnormal_definition(const Subgroup& h);
/// Factor route: K = ε^{-1}(H) must decompose as π1(K) × π2(K) with both
/// projections abnormal in their factors. Requires a solvable factor;
/// otherwise the verdict is hypothesis_not_met, never a silent false.
EmbeddingVerdict is_abnormal_central(const CentralProduct& cp, const Subgroup& h);
/// Definition oracle applied to ε^{-1}(H) inside D.
EmbeddingVerdict is_abnormal_preimage(const CentralProduct& cp, const Subgroup& h);

struct ClassificationRow {
  std::uint32_t order = 0;
  std::vector<std::string> generators;
  std::string type;
  bool normal = false;
  int defect = -1;  ///< -1 when not subnormal
  bool abnormal = false;
  bool methods_agree = true;
  bool operator==(const ClassificationRow&) const = default;
};

struct ClassificationReport {
  std::uint32_t group_order = 0;
  std::string group_type;
  std::vector<ClassificationRow> rows;                            ///< canonical order
  std::vector<std::pair<std::string, std::uint32_t>> totals_by_type;  ///< first-appearance order
  std::uint32_t total = 0;
  std::uint32_t total_normal = 0;
};

/// Runs every applicable method for each property on every subgroup and
/// insists they agree; a mismatch is a hard disagreement error carrying both
/// verdicts.
ClassificationReport classify_subgroups(const CentralProduct& cp, const Limits& limits = {});

}  // namespace amalgam
