#pragma once

#include "certificate.hpp"
#include "correction.hpp"
#include "odd_incidence.hpp"
#include "oracle.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace z4z2 {

enum class Stage { CorollaryMap, ThetaFastPath, OddIncidenceCorrection, ExhaustiveCharacterization, OracleOnly };

inline std::string to_string(Stage s) {
  switch (s) {
    case Stage::CorollaryMap: return "corollary-map";
    case Stage::ThetaFastPath: return "theta-fast-path";
    case Stage::OddIncidenceCorrection: return "odd-incidence+correction";
    case Stage::ExhaustiveCharacterization: return "exhaustive-characterization";
    case Stage::OracleOnly: return "oracle-only";
  }
  return "unknown";
}

inline constexpr std::size_t kDefaultPmBudget = 2000;

struct PipelineConfig {
  /// Perfect matchings scanned per stage; unset means default_pm_limit(order, kDefaultPmBudget).
  std::optional<std::size_t> pm_limit;
  std::size_t search_nodes = kDefaultSearchNodes;
  std::size_t oracle_nodes = kDefaultOracleNodes;
  std::size_t even_matching_limit = 64;  // M_even choices per 2-factor
  std::size_t k_matching_limit = 64;     // perfect matchings of K_odd per M_even
  /// Stages to run, in order; the default runs all five.
  std::vector<Stage> stages{Stage::CorollaryMap, Stage::ThetaFastPath, Stage::OddIncidenceCorrection,
                            Stage::ExhaustiveCharacterization, Stage::OracleOnly};
};

struct StageOutcome {
  Stage stage;
  std::string outcome;  // success | failed | budget-exhausted | refuted
  std::string detail;
  double millis = 0.0;
};

struct PipelineReport {
  std::string verdict = "unknown";  // colorable | not-colorable | unknown
  std::optional<Stage> stage;
  std::optional<EdgeColoring> coloring;
  std::optional<json> certificate;
  std::vector<StageOutcome> outcomes;
  std::vector<std::string> budgets_hit;
  std::vector<json> diagnostics;  // one entry per correction attempt
  double millis = 0.0;

  json to_json(const std::string& id, bool with_timing = true) const {
    json j;
    j["id"] = id;
    j["verdict"] = verdict;
    j["stage"] = stage ? json(to_string(*stage)) : json(nullptr);
    json outs = json::array();
    for (const auto& o : outcomes) {
      json x{{"stage", to_string(o.stage)}, {"outcome", o.outcome}, {"detail", o.detail}};
      if (with_timing) x["millis"] = o.millis;
      outs.push_back(x);
    }
    j["stages"] = outs;
    j["budgets_hit"] = budgets_hit;
    j["correction_attempts"] = diagnostics.size();
    if (with_timing) j["millis"] = millis;
    return j;
  }
};

namespace detail {

struct StageResult {
  std::optional<EdgeColoring> coloring;
  std::string detail;
  bool budget = false;
  bool refuted = false;
};

inline StageResult theta_stage(const CubicGraph& g, std::optional<std::size_t> pm_limit) {
  StageResult r;
  PerfectMatchingStream stream(g, pm_limit);
  std::size_t factors = 0, candidates = 0;
  while (auto pm = stream.next()) {
    ++factors;
    TwoFactor f = two_factor(g, *pm);
    if (f.odd_count() != 2) continue;
    for_each_maximum_matching(g, f, [&](const MatchingInF& m) {
      ++candidates;
      ReducedGraph h = reduce(g, f, m);
      MainComponent mc = classify_main_component(g, h);
      if (mc.kind != MainComponentKind::ThetaGraph) return true;
      for (const FPath& t : mc.threads) {
        if (!h.f_edges.contains(t.edges.front()) || !h.f_edges.contains(t.edges.back())) continue;
        FMatching fm = make_f_matching(g, h, {t});
        FComplement fc = f_complement(g, h, fm);
        if (!fc.three_even()) throw Error(Errc::ClaimViolated, "theta main component gave a 3-odd loop");
        r.coloring = construct(g, f, m, fm, fc);
        r.detail = "theta main component";
        return false;
      }
      throw Error(Errc::ClaimViolated, "theta main component without an F-path");
    });
    if (r.coloring) return r;
  }
  r.budget = !stream.exhausted();
  r.detail = std::to_string(factors) + " 2-factors, " + std::to_string(candidates) + " maximum matchings, no theta";
  return r;
}

inline StageResult odd_incidence_stage(const CubicGraph& g, const PipelineConfig& config,
                                       std::optional<std::size_t> pm_limit, std::vector<json>& diagnostics) {
  StageResult r;
  PerfectMatchingStream stream(g, pm_limit);
  std::size_t derived = 0;
  while (auto pm = stream.next()) {
    TwoFactor f = two_factor(g, *pm);
    std::size_t evens = 0;
    for_each_even_matching(f, [&](const EdgeSet& m_even) {
      if (evens++ >= config.even_matching_limit) {
        r.budget = true;
        return false;
      }
      OddCycleIncidenceGraph k = build_k_odd(g, f, m_even);
      std::size_t tried = 0;
      for_each_k_perfect_matching(k, [&](const std::vector<int>& mk) {
        if (tried++ >= config.k_matching_limit) {
          r.budget = true;
          return false;
        }
        auto d = derive_from_k_matching(g, f, k, mk);
        if (!d) return true;
        ++derived;
        FComplement fc = f_complement(g, d->h, d->fm);
        if (fc.three_even()) {
          r.coloring = construct(g, f, d->m, d->fm, fc);
          r.detail = "derived matching already 3-even";
          return false;
        }
        CorrectionOutcome c = correct_and_color(g, f, d->m, d->fm, fc);
        diagnostics.push_back(c.diagnostics);
        if (c.status == CorrectionStatus::Colored) {
          r.coloring = std::move(c.coloring);
          r.detail = "correction repaired " + std::to_string(c.three_odd_loops) + " 3-odd loops";
          return false;
        }
        return true;
      });
      return !r.coloring.has_value();
    });
    if (r.coloring) return r;
  }
  if (!stream.exhausted()) r.budget = true;
  r.detail = std::to_string(derived) + " derived matchings, " + std::to_string(diagnostics.size()) +
             " correction attempts, none colored";
  return r;
}

}  // namespace detail

/// Runs the configured stages in order; the first coloring wins and is
/// certified only after it re-verifies.
inline PipelineReport run_pipeline(const CubicGraph& g, const PipelineConfig& config = {}) {
  detail::Stopwatch total;
  PipelineReport rep;
  const auto pm_limit = config.pm_limit ? config.pm_limit : default_pm_limit(g.order(), kDefaultPmBudget);

  for (Stage stage : config.stages) {
    detail::Stopwatch clock;
    detail::StageResult r;
    try {
      switch (stage) {
        case Stage::CorollaryMap: {
          auto v = is_3_edge_colorable(g, config.oracle_nodes);
          if (v.colorable) {
            r.coloring = from_3_edge_coloring(g, v.classes);
            r.detail = "3-edge-colorable";
          } else {
            r.detail = "not 3-edge-colorable";
          }
          break;
        }
        case Stage::ThetaFastPath: r = detail::theta_stage(g, pm_limit); break;
        case Stage::OddIncidenceCorrection:
          r = detail::odd_incidence_stage(g, config, pm_limit, rep.diagnostics);
          break;
        case Stage::ExhaustiveCharacterization: {
          auto v = characterization_search(g, {config.search_nodes, pm_limit});
          if (v.witness) {
            const Structures& s = *v.witness;
            r.coloring = construct(g, s.f, s.m, s.fm, s.fc);
            r.detail = "witness after " + std::to_string(v.nodes) + " nodes";
          } else {
            r.refuted = true;
            r.detail = "no witness in " + std::to_string(v.factors) + " 2-factors";
          }
          break;
        }
        case Stage::OracleOnly: {
          auto v = brute_force_z4z2(g, {config.oracle_nodes, false});
          if (v.witness) {
            r.coloring = std::move(v.witness);
            r.detail = "brute force after " + std::to_string(v.stats.nodes) + " nodes";
          } else {
            r.refuted = true;
            r.detail = "brute force found no coloring";
          }
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExhausted) throw;
      r.budget = true;
      r.detail = e.what();
    }
    StageOutcome o{stage, "failed", r.detail, clock.millis()};
    if (r.budget) rep.budgets_hit.push_back(to_string(stage));
    if (r.coloring) {
      if (!verify(g, *r.coloring).all()) throw Error(Errc::InvalidColoring, "stage produced an unverified coloring");
      o.outcome = "success";
      rep.outcomes.push_back(o);
      rep.verdict = "colorable";
      rep.stage = stage;
      rep.certificate = make_certificate(g, *r.coloring, to_string(stage), r.detail);
      rep.coloring = std::move(r.coloring);
      break;
    }
    if (r.refuted) {
      o.outcome = "refuted";
      rep.outcomes.push_back(o);
      rep.verdict = "not-colorable";
      break;
    }
    o.outcome = r.budget ? "budget-exhausted" : "failed";
    rep.outcomes.push_back(o);
  }
  rep.millis = total.millis();
  return rep;
}

}  // namespace z4z2
