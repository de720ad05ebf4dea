#include "hgsq/verify.hpp"

#include <string>

#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/parallel.hpp"

namespace hgsq {

namespace {

std::string pair_name(const GroupSpec& galois, const GroupSpec& type) {
  return "Gamma=(" + galois.triple() + ") G=(" + type.triple() + ")";
}

}  // namespace

PairCheck verify_pair(const GroupSpec& galois, const GroupSpec& type, const VerifyOptions& options) {
  PairCheck out;
  out.galois = galois;
  out.type = type;
  const std::string who = pair_name(galois, type);
  const PairContext ctx = build_context(galois, type);
  out.compatible = ctx.compatible;

  CountReport report;
  try {
    report = count_report(ctx);
  } catch (const Error& ex) {
    out.failure = who + ": " + ex.what();
    return out;
  }
  out.formula_hgs = report.hgs;
  out.formula_regular = report.regular_subgroups;
  out.formula_nh = report.nh;

  if (ctx.compatible) {
    TableConstants tc = table_constants(type);
    const u64 g = ctx.type_params.g;
    if (options.lambda_offset != 0 && g > 1) tc.lambda = (tc.lambda + options.lambda_offset) % g;
    for (std::size_t h = 0; h < ctx.orbit_reps.size(); ++h) {
      u64 table = 0;
      if (options.run_semantic) {
        const PredicateComparison cmp = compare_predicates(ctx, h, options.oracle, tc);
        out.quintuples += cmp.examined;
        table = cmp.table_count;
        out.semantic_nh.push_back(cmp.semantic_count);
        if (cmp.first_mismatch && out.failure.empty()) {
          out.failure = who + " h=" + std::to_string(h) + ": table and semantic predicates differ at " +
                        to_string(*cmp.first_mismatch);
        }
        if (BigInt(cmp.semantic_count) != report.nh[h] && out.failure.empty()) {
          out.failure = who + " h=" + std::to_string(h) + ": semantic |N_h| = " +
                        std::to_string(cmp.semantic_count) + ", formula " + report.nh[h].str();
        }
      } else {
        const CensusResult r = enumerate_Nh(ctx, h, QuintuplePredicate::Table, options.oracle, tc);
        out.quintuples += r.candidates_examined;
        table = static_cast<u64>(r.count);
      }
      out.table_nh.push_back(table);
      if (BigInt(table) != report.nh[h] && out.failure.empty()) {
        out.failure = who + " h=" + std::to_string(h) + ": table |N_h| = " + std::to_string(table) +
                      ", formula " + report.nh[h].str();
      }
    }
  }

  if (options.run_census) {
    out.census = regular_subgroup_census(galois, type, options.oracle).count;
    if (out.census != report.regular_subgroups && out.failure.empty()) {
      out.failure = who + ": census finds " + out.census.str() + " regular subgroups, formula " +
                    report.regular_subgroups.str();
    }
    const BigRational via_census(report.aut_galois * out.census, report.aut_type);
    if (via_census != BigRational(report.hgs) && out.failure.empty()) {
      out.failure = who + ": |Aut Gamma|/|Aut G| * census = " + via_census.str() + ", formula " +
                    report.hgs.str();
    }
  }
  return out;
}

VerifySummary verify_up_to(u64 n_max, const VerifyOptions& options) {
  struct Job {
    std::size_t order_slot;
    GroupSpec galois;
    GroupSpec type;
  };
  VerifySummary summary;
  std::vector<Job> jobs;
  for (u64 n = 1; n <= n_max; ++n) {
    if (!is_squarefree(n)) continue;
    const std::vector<GroupSpec> classes = enumerate_groups(n);
    summary.orders.push_back({n, classes.size(), classes.size() * classes.size(), 0});
    for (const GroupSpec& a : classes) {
      for (const GroupSpec& b : classes) jobs.push_back({summary.orders.size() - 1, a, b});
    }
  }

  VerifyOptions inner = options;
  inner.oracle.threads = 1;
  std::vector<PairCheck> results(jobs.size());
  parallel_for(jobs.size(), options.oracle.threads,
               [&](std::size_t i) { results[i] = verify_pair(jobs[i].galois, jobs[i].type, inner); });

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    PairCheck& r = results[i];
    ++summary.pairs;
    summary.compatible_pairs += r.compatible ? 1 : 0;
    summary.quintuples += r.quintuples;
    summary.subgroups += r.census;
    if (!r.ok()) {
      ++summary.orders[jobs[i].order_slot].failures;
      summary.failures.push_back(std::move(r));
    }
  }
  return summary;
}

}  // namespace hgsq
