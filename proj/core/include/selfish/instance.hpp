#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfish/rational.hpp"

namespace selfish {

/// Items with rational sizes in (0, alpha], packed into unit-capacity bins.
/// alpha = 1 is the classic game; alpha <= 1/t gives the parametric game.
struct BinPackInstance {
  std::vector<Rational> items;
  Rational alpha = 1;

  int item_count() const { return static_cast<int>(items.size()); }
  void validate() const;
};

enum class MachineModel { identical, related, unrelated };

std::string to_string(MachineModel m);

/// Jobs on machines. For identical/related machines, `sizes` holds the job
/// sizes and `speeds` the machine speeds (all 1 for identical, min 1 for
/// related). For unrelated machines `times[i][k]` is the processing time of
/// job k on machine i; nullopt marks an unavailable machine.
struct SchedInstance {
  MachineModel model = MachineModel::identical;
  std::vector<Rational> speeds;
  std::vector<Rational> sizes;
  std::vector<std::vector<std::optional<Rational>>> times;

  static SchedInstance identical(int machines, std::vector<Rational> sizes);
  static SchedInstance related(std::vector<Rational> speeds, std::vector<Rational> sizes);
  static SchedInstance unrelated(std::vector<std::vector<std::optional<Rational>>> times);

  int machine_count() const;
  int job_count() const;

  /// Processing time of `job` on `machine`; nullopt when unavailable.
  std::optional<Rational> time_on(int machine, int job) const;

  void validate() const;
};

using GameInstance = std::variant<BinPackInstance, SchedInstance>;

int agent_count(const GameInstance& inst);

/// Map from agent index to resource index. Empty resources are representable;
/// resource_count is declared, not inferred.
struct Assignment {
  std::vector<int> target;
  int resource_count = 0;

  int agent_count() const { return static_cast<int>(target.size()); }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct LoadVector {
  std::vector<Rational> loads;

  int size() const { return static_cast<int>(loads.size()); }
  friend bool operator==(const LoadVector&, const LoadVector&) = default;
};

/// Per-resource loads. For bin packing: sum of item sizes per bin. For
/// scheduling: sum of processing times divided by speed. Throws
/// InvalidAssignment on out-of-range targets or jobs on unavailable machines.
LoadVector load_vector(const SchedInstance& inst, const Assignment& a);
LoadVector load_vector(const BinPackInstance& inst, const Assignment& a);
LoadVector load_vector(const GameInstance& inst, const Assignment& a);

/// True iff every bin's total size is at most 1.
bool is_valid_packing(const BinPackInstance& inst, const Assignment& a);

/// Proportional cost share a_i / (load of the item's bin); infinite if the
/// bin is packed above capacity.
ExtRational binpack_item_cost(const BinPackInstance& inst, const Assignment& p, int item);

/// Cost of one agent: load of its machine for scheduling/covering, cost
/// share for bin packing.
ExtRational agent_cost(const GameInstance& inst, const Assignment& a, const LoadVector& loads,
                       int agent);

std::vector<ExtRational> agent_costs(const GameInstance& inst, const Assignment& a);

enum class Objective { bins, makespan, cover, envy };

std::string to_string(Objective o);

/// Social objective value. bins = number of non-empty bins; makespan = max
/// load; cover = min load; envy = max/min (1 when all loads are zero,
/// infinite when only the min is zero).
ExtRational objective(const GameInstance& inst, const Assignment& a, Objective kind);

/// Loads in non-increasing order.
LoadVector sorted_loads(const LoadVector& lv);

/// Inverted lexicographic order on sorted non-increasing vectors: compares
/// from the last coordinate backward, larger tail wins.
std::strong_ordering compare_invlex(const LoadVector& a, const LoadVector& b);

/// Plain lexicographic order from the first coordinate.
std::strong_ordering compare_lex(const LoadVector& a, const LoadVector& b);

/// Row-stochastic matrix of rationals; rows are agents, columns machines.
struct MixedProfile {
  std::vector<std::vector<Rational>> probs;

  int agent_count() const { return static_cast<int>(probs.size()); }
  void validate() const;
};

}  // namespace selfish
