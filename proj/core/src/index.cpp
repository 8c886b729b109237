#include "icis/index.hpp"

#include <chrono>

#include "icis/minors.hpp"

namespace icis {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "invalid problem:";
  for (const auto& v : violations) out += "\n  " + v.message;
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::missing_ring: return "missing_ring";
    case ViolationKind::ring_mismatch: return "ring_mismatch";
    case ViolationKind::no_collections: return "no_collections";
    case ViolationKind::missing_rank: return "missing_rank";
    case ViolationKind::rank_in_icis_mode: return "rank_in_icis_mode";
    case ViolationKind::map_in_smooth_mode: return "map_in_smooth_mode";
    case ViolationKind::map_too_long: return "map_too_long";
    case ViolationKind::zero_map_component: return "zero_map_component";
    case ViolationKind::k_not_positive: return "k_not_positive";
    case ViolationKind::k_exceeds_bound: return "k_exceeds_bound";
    case ViolationKind::member_count: return "member_count";
    case ViolationKind::member_length: return "member_length";
    case ViolationKind::k_sum: return "k_sum";
  }
  return "unknown";
}

std::vector<Violation> validate(const ProblemSpec& spec) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind kind, std::string message) { out.push_back({kind, std::move(message)}); };

  if (!spec.ring) {
    add(ViolationKind::missing_ring, "no variables given");
    return out;
  }
  const auto n = spec.ring->nvars();
  const bool smooth = spec.mode == Mode::smooth;

  bool foreign = false;
  for (const auto& f : spec.map) foreign |= !same_ring(f.ring(), spec.ring);
  for (const auto& c : spec.collections)
    for (const auto& member : c.members)
      for (const auto& p : member) foreign |= !same_ring(p.ring(), spec.ring);
  if (foreign) add(ViolationKind::ring_mismatch, "some polynomials do not belong to the problem's ring");

  if (spec.collections.empty()) add(ViolationKind::no_collections, "at least one collection is required");

  // Column length and the room left for the k_i: m and m (smooth), n and n - l (ICIS).
  std::size_t column_length = n;
  std::size_t k_budget = n;
  if (smooth) {
    if (!spec.rank || *spec.rank == 0) {
      add(ViolationKind::missing_rank, "smooth mode needs a positive bundle rank");
    } else {
      column_length = *spec.rank;
    }
    if (!spec.map.empty()) add(ViolationKind::map_in_smooth_mode, "a map f is only allowed in icis mode");
  } else {
    if (spec.rank) add(ViolationKind::rank_in_icis_mode, "a bundle rank is only allowed in smooth mode");
    if (spec.map.size() >= n) {
      add(ViolationKind::map_too_long, "map has " + str(spec.map.size()) + " components; at most " + str(n - 1) +
                                           " fit in " + str(n) + " variables");
    } else {
      k_budget = n - spec.map.size();
    }
    for (std::size_t r = 0; r < spec.map.size(); ++r)
      if (spec.map[r].is_zero()) add(ViolationKind::zero_map_component, "map component " + str(r) + " is zero");
  }
  const bool have_bound = !smooth || (spec.rank && *spec.rank > 0);
  const std::size_t bound = smooth ? column_length : k_budget;

  std::size_t k_sum = 0;
  for (std::size_t i = 0; i < spec.collections.size(); ++i) {
    const auto& c = spec.collections[i];
    const auto where = "collection " + str(i);
    k_sum += c.k;
    if (c.k == 0) {
      add(ViolationKind::k_not_positive, where + ": k must be a positive integer");
      continue;
    }
    if (!have_bound) continue;
    if (c.k > bound) {
      add(ViolationKind::k_exceeds_bound, where + ": k = " + str(c.k) + " exceeds " + str(bound) +
                                              (smooth ? " (the bundle rank m)" : " (n - l)"));
      continue;
    }
    const auto expected = bound - c.k + 1;
    if (c.members.size() != expected)
      add(ViolationKind::member_count, where + ": expected " + str(expected) + (smooth ? " sections" : " forms") +
                                           " (" + (smooth ? "m - k + 1" : "n - l - k + 1") + "), got " +
                                           str(c.members.size()));
    for (std::size_t j = 0; j < c.members.size(); ++j)
      if (c.members[j].size() != column_length)
        add(ViolationKind::member_length, where + ", member " + str(j) + ": expected " + str(column_length) +
                                              " components, got " + str(c.members[j].size()));
  }
  const auto target = smooth ? n : k_budget;
  if (!spec.collections.empty() && (smooth || spec.map.size() < n) && k_sum != target)
    add(ViolationKind::k_sum, std::string("sum of k_i is ") + str(k_sum) + " but must equal " +
                                  (smooth ? "n = " : "n - l = ") + str(target));
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

IdealGens build_index_ideal(const ProblemSpec& spec) {
  if (auto violations = validate(spec); !violations.empty()) throw ValidationError(std::move(violations));
  std::vector<Polynomial> gens;
  if (spec.mode == Mode::smooth) {
    for (const auto& c : spec.collections) {
      auto minors = maximal_minors(assemble_section_matrix(c.members));
      gens.insert(gens.end(), minors.begin(), minors.end());
    }
  } else {
    gens = spec.map;
    for (const auto& c : spec.collections) {
      std::vector<OneForm> forms;
      forms.reserve(c.members.size());
      for (const auto& member : c.members) forms.emplace_back(spec.ring, member);
      auto minors = maximal_minors(assemble_icis_matrix(spec.map, forms));
      gens.insert(gens.end(), minors.begin(), minors.end());
    }
  }
  return IdealGens(spec.ring, std::move(gens), MonomialOrder::local());
}

const char* to_string(OracleAgreement a) {
  switch (a) {
    case OracleAgreement::agree: return "agree";
    case OracleAgreement::disagree: return "disagree";
    case OracleAgreement::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

OracleDisagreement::OracleDisagreement(IndexResult result)
    : std::runtime_error("standard basis and truncation oracle disagree on the colength"),
      result_(std::move(result)) {}

IndexResult compute_index(const ProblemSpec& spec, const IndexOptions& options) {
  const IdealGens ideal = build_index_ideal(spec);
  IndexResult result;
  result.generator_count = ideal.generators().size();

  auto start = std::chrono::steady_clock::now();
  const StandardBasis basis = compute_standard_basis(ideal, options.budget);
  const Staircase stairs = colength(basis, options.budget);
  result.basis_seconds = seconds_since(start);
  result.basis_size = basis.size();
  result.leading_monomials = basis.leading_monomials();
  result.index = stairs.colength();
  result.staircase = stairs.monomials_outside;

  if (!options.with_oracle) return result;

  start = std::chrono::steady_clock::now();
  OracleCheck check;
  check.report = oracle::stabilized_colength(spec.ring, ideal.generators(), options.max_truncation);
  result.oracle_seconds = seconds_since(start);
  switch (check.report.verdict) {
    case oracle::Verdict::stabilized:
      check.agreement = result.index == check.report.value ? OracleAgreement::agree : OracleAgreement::disagree;
      break;
    case oracle::Verdict::not_zero_dimensional:
      check.agreement = result.infinite() ? OracleAgreement::agree : OracleAgreement::disagree;
      break;
    case oracle::Verdict::inconclusive:
      check.agreement = OracleAgreement::inconclusive;
      break;
  }
  result.oracle = std::move(check);
  if (result.oracle->agreement == OracleAgreement::disagree) throw OracleDisagreement(std::move(result));
  return result;
}

}  // namespace icis
