#include "ramcov/cover_model.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "ramcov/rational.hpp"

namespace ramcov::model {

namespace {

using std::to_string;

std::pair<std::string, std::string> unordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

class Checker {
 public:
  Checker(const BaseGeometry& base, const CoverDescription& cover, const ValidateOptions& opts)
      : base_(base), cover_(cover), opts_(opts) {}

  std::vector<Violation> run() {
    check_structure();
    check_sheet_sums();
    check_crossings();
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  void add(Rule rule, std::vector<std::string> where, std::string message) {
    out_.push_back({rule, std::move(where), std::move(message)});
  }

  const std::vector<RamSheet>* sheets_of(const std::string& id) const {
    auto it = cover_.ramification.find(id);
    return it == cover_.ramification.end() ? nullptr : &it->second;
  }

  void check_structure() {
    if (base_.genus_C < 0) add(Rule::Structure, {"base"}, "genus_C must be non-negative");
    if (cover_.degree < 1) add(Rule::Structure, {"cover"}, "degree must be positive");

    std::set<std::string> ids;
    for (const auto& c : base_.components) {
      if (!ids.insert(c.id).second)
        add(Rule::Structure, {c.id}, "duplicate component id");
      if (c.genus < 0) add(Rule::Structure, {c.id}, "component genus must be non-negative");
      if (c.fiber_deg < 0)
        add(Rule::Structure, {c.id}, "fiber_deg must be non-negative");
      const auto* sheets = sheets_of(c.id);
      if (sheets == nullptr) {
        add(Rule::Structure, {c.id}, "no ramification data for component");
      } else if (sheets->empty()) {
        add(Rule::Structure, {c.id}, "ramification sheet list is empty");
      } else {
        for (std::size_t j = 0; j < sheets->size(); ++j) {
          const RamSheet& s = (*sheets)[j];
          if (s.e < 1 || s.f < 1)
            add(Rule::Structure, {c.id, "sheet " + to_string(j)},
                "sheet needs e >= 1 and f >= 1");
        }
      }
    }
    for (const auto& [id, sheets] : cover_.ramification)
      if (!ids.contains(id))
        add(Rule::Structure, {id}, "ramification given for unknown component");

    std::set<std::int64_t> indices;
    std::map<std::pair<std::string, std::string>, std::int64_t> per_pair;
    for (const auto& x : base_.crossings) {
      const std::string where = "crossing " + to_string(x.index);
      if (!indices.insert(x.index).second)
        add(Rule::Structure, {where}, "duplicate crossing index");
      for (const auto* end : {&x.first, &x.second})
        if (!ids.contains(*end))
          add(Rule::Structure, {where, *end}, "crossing references unknown component");
      if (x.first == x.second)
        add(Rule::Structure, {where, x.first},
            "a component cannot cross itself (components must be smooth)");
      ++per_pair[unordered(x.first, x.second)];
      if (!cover_.points_above.contains(x.index))
        add(Rule::Structure, {where}, "no points_above entry for crossing");
    }
    for (const auto& [index, points] : cover_.points_above)
      if (!indices.contains(index))
        add(Rule::Structure, {"crossing " + to_string(index)},
            "points_above given for unknown crossing");

    for (const auto& pc : base_.intersections) {
      const auto key = unordered(pc.first, pc.second);
      const auto it = per_pair.find(key);
      const std::int64_t actual = it == per_pair.end() ? 0 : it->second;
      if (actual != pc.count)
        add(Rule::Structure, {key.first, key.second},
            "declared intersection count " + to_string(pc.count) + " but " +
                to_string(actual) + " crossings listed");
    }
  }

  void check_sheet_sums() {
    for (const auto& c : base_.components) {
      const auto* sheets = sheets_of(c.id);
      if (sheets == nullptr || sheets->empty()) continue;
      Integer total = 0;
      for (const auto& s : *sheets) total += Integer(s.e) * s.f;
      if (total != cover_.degree)
        add(Rule::SheetSum, {c.id},
            "sum of e*f is " + total.get_str() + " but degree is " + to_string(cover_.degree));
    }
  }

  void check_crossings() {
    for (const auto& x : base_.crossings) {
      auto it = cover_.points_above.find(x.index);
      if (it == cover_.points_above.end()) continue;
      const auto* first = sheets_of(x.first);
      const auto* second = sheets_of(x.second);
      if (first == nullptr || second == nullptr || x.first == x.second) continue;
      check_crossing(x, it->second, *first, *second);
    }
  }

  void check_crossing(const Crossing& x, const std::vector<PointAbove>& points,
                      const std::vector<RamSheet>& first, const std::vector<RamSheet>& second) {
    const std::string where = "crossing " + to_string(x.index);
    Integer local_degree_sum = 0;
    bool all_resolved = true;
    std::vector<Integer> m2_per_sheet(first.size()), m1_per_sheet(second.size());

    for (std::size_t k = 0; k < points.size(); ++k) {
      const PointAbove& p = points[k];
      const std::string point = "point " + to_string(k);
      const bool j_ok = p.j >= 0 && static_cast<std::size_t>(p.j) < first.size();
      const bool jp_ok = p.jp >= 0 && static_cast<std::size_t>(p.jp) < second.size();
      if (!j_ok)
        add(Rule::Structure, {where, point},
            "sheet index j = " + to_string(p.j) + " out of range for " + x.first);
      if (!jp_ok)
        add(Rule::Structure, {where, point},
            "sheet index jp = " + to_string(p.jp) + " out of range for " + x.second);

      std::optional<local::LocalCoverType> type;
      try {
        type = resolve_local(p.local);
      } catch (const InvalidInput& e) {
        add(Rule::LocalType, {where, point}, e.what());
        all_resolved = false;
        continue;
      }
      local_degree_sum += type->d_y;

      if (j_ok && type->e1 != first[p.j].e)
        add(Rule::RamificationMatch, {where, point},
            "e1 = " + to_string(type->e1) + " but sheet " + to_string(p.j) + " of " + x.first +
                " has e = " + to_string(first[p.j].e));
      if (jp_ok && type->e2 != second[p.jp].e)
        add(Rule::RamificationMatch, {where, point},
            "e2 = " + to_string(type->e2) + " but sheet " + to_string(p.jp) + " of " +
                x.second + " has e = " + to_string(second[p.jp].e));
      if (j_ok) m2_per_sheet[p.j] += type->m2;
      if (jp_ok) m1_per_sheet[p.jp] += type->m1;
    }

    if (all_resolved && local_degree_sum != cover_.degree)
      add(Rule::LocalDegreeSum, {where},
          "sum of d_y is " + local_degree_sum.get_str() + " but degree is " +
              to_string(cover_.degree));

    if (!opts_.strict || !all_resolved) return;
    // The restriction of the cover to a branch is t -> t^{m2} (resp. m1) in
    // the quotient coordinate, so the local degrees over x add up to f.
    for (std::size_t j = 0; j < first.size(); ++j)
      if (m2_per_sheet[j] != first[j].f)
        add(Rule::SheetIncidence, {where, x.first, "sheet " + to_string(j)},
            "sum of m2 over points on the sheet is " + m2_per_sheet[j].get_str() +
                " but f = " + to_string(first[j].f));
    for (std::size_t j = 0; j < second.size(); ++j)
      if (m1_per_sheet[j] != second[j].f)
        add(Rule::SheetIncidence, {where, x.second, "sheet " + to_string(j)},
            "sum of m1 over points on the sheet is " + m1_per_sheet[j].get_str() +
                " but f = " + to_string(second[j].f));
  }

  const BaseGeometry& base_;
  const CoverDescription& cover_;
  const ValidateOptions& opts_;
  std::vector<Violation> out_;
};

}  // namespace

const BranchComponent* BaseGeometry::find_component(const std::string& id) const {
  auto it = std::find_if(components.begin(), components.end(),
                         [&](const BranchComponent& c) { return c.id == id; });
  return it == components.end() ? nullptr : &*it;
}

std::size_t BaseGeometry::crossings_on(const std::string& id) const {
  return static_cast<std::size_t>(std::count_if(
      crossings.begin(), crossings.end(),
      [&](const Crossing& x) { return x.first == id || x.second == id; }));
}

local::LocalCoverType resolve_local(const LocalSpec& spec) {
  if (const auto* lattice = std::get_if<local::LatticeSubgroup>(&spec))
    return local::local_type(*lattice);
  const auto& p = std::get<LocalParameters>(spec);
  return local::LocalCoverType::from_parameters(p.n, p.q, p.m1, p.m2);
}

std::string rule_code(Rule rule) {
  switch (rule) {
    case Rule::Structure: return "S";
    case Rule::SheetSum: return "V1";
    case Rule::LocalDegreeSum: return "V2";
    case Rule::RamificationMatch: return "V3";
    case Rule::SheetIncidence: return "V4";
    case Rule::LocalType: return "V5";
  }
  return "?";
}

bool ValidationReport::has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(const BaseGeometry& base, const CoverDescription& cover,
                          const ValidateOptions& options) {
  return ValidationReport{Checker(base, cover, options).run()};
}

EulerData derived_euler_data(const BaseGeometry& base) {
  EulerData out;
  out.singular_points = static_cast<std::int64_t>(base.crossings.size());
  std::int64_t euler_D = out.singular_points;
  for (const auto& c : base.components) {
    const std::int64_t open =
        2 - 2 * c.genus - static_cast<std::int64_t>(base.crossings_on(c.id));
    out.open_euler.push_back(open);
    euler_D += open;
  }
  out.euler_D = euler_D;
  out.euler_U = base.euler_X - euler_D;
  return out;
}

}  // namespace ramcov::model
