#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypermonad/fixtures.hpp"
#include "hypermonad/serialize.hpp"
#include "hypermonad/state_laws.hpp"

namespace hypermonad {

namespace cli_detail {

/** Ring argument: either a JSON file path or an inline "p,r,d" triple. */
inline GaloisRing parse_ring(const std::string& arg) {
  if (std::filesystem::exists(arg)) return ring_from_json(load_json_file(arg));
  std::vector<std::uint32_t> nums;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ','))
    nums.push_back(std::uint32_t(std::stoul(item)));
  if (nums.size() != 3)
    fail(errc::io_error, "ring argument must be a JSON file or p,r,d: " + arg);
  return GaloisRing::make(nums[0], nums[1], nums[2]);
}

/** Monoid argument "i,c" (cyclic) or "i,c;i,c;..." (direct sum). */
inline Monoid parse_monoid(const std::string& arg) {
  std::vector<CyclicMonoid> parts;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto comma = part.find(',');
    if (comma == std::string::npos)
      fail(errc::io_error, "monoid argument must be i,c pairs: " + arg);
    parts.push_back(CyclicMonoid::make(std::uint32_t(std::stoul(part.substr(0, comma))),
                                       std::uint32_t(std::stoul(part.substr(comma + 1)))));
  }
  if (parts.empty()) fail(errc::io_error, "empty monoid argument");
  return parts.size() == 1 ? Monoid::cyclic(parts[0].index, parts[0].period)
                           : Monoid::direct_sum(parts);
}

/** Bounds argument "grade=3,edges=4,edgesize=3,monoid=4,support=4". */
inline void parse_bounds(const std::string& arg, GenBounds& b, std::uint32_t& max_grade) {
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(errc::io_error, "bounds entry needs key=value: " + item);
    std::string key = item.substr(0, eq);
    std::uint32_t value = std::uint32_t(std::stoul(item.substr(eq + 1)));
    if (key == "grade")
      max_grade = value;
    else if (key == "edges")
      b.max_edges = value;
    else if (key == "edgesize")
      b.max_edge_size = value;
    else if (key == "monoid")
      b.max_monoid = value;
    else if (key == "support")
      b.max_support = value;
    else
      fail(errc::io_error, "unknown bounds key: " + key);
  }
}

inline void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    write_text_file(out_path, text);
}

inline void emit_json(const Json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

inline void emit_state(const StateVector& psi, const std::string& format,
                       const std::string& out_path) {
  if (format == "csv")
    emit(state_to_csv(psi), out_path);
  else
    emit_json(to_json(psi), out_path);
}

/** Prints reports per --format; returns true iff every report passed. */
inline bool emit_reports(const std::vector<CheckReport>& reports, const std::string& format) {
  bool all = true;
  if (format == "json") {
    Json arr = Json::array();
    for (const CheckReport& r : reports) {
      arr.push_back(to_json(r));
      all = all && r.passed();
    }
    std::cout << arr.dump(2) << "\n";
    return all;
  }
  if (format == "csv") std::cout << "law,cases,failures,max_deviation,exhaustive,passed\n";
  for (const CheckReport& r : reports) {
    all = all && r.passed();
    if (format == "csv") {
      std::cout << r.law << "," << r.cases << "," << r.failure_count << "," << r.max_deviation
                << "," << (r.exhaustive ? 1 : 0) << "," << (r.passed() ? 1 : 0) << "\n";
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.law << " (cases=" << r.cases
              << (r.exhaustive ? ", exhaustive" : "") << ", max_dev=" << r.max_deviation << ")\n";
    for (const Json& w : r.failures) std::cout << "  witness: " << w.dump() << "\n";
  }
  return all;
}

/** Overlays calibration/weight payload keys from a side file onto a hypergraph object. */
inline Json overlay(Json base, const Json& extra, std::initializer_list<const char*> keys) {
  for (const char* key : keys)
    if (extra.contains(key)) base[key] = extra.at(key);
  return base;
}

/** Autodetects the JSON payload kind for `join`. */
inline std::string detect_kind(const Json& j) {
  if (j.contains("calibrations")) return "calibrated";
  if (j.contains("weights")) return "weighted";
  if (j.contains("edges")) return "hypergraph";
  if (j.contains("ring") && j.contains("entries")) return "cdit";
  if (j.contains("amplitudes")) return "state";
  fail(errc::io_error, "cannot detect payload kind from JSON keys");
}

}  // namespace cli_detail

/** Front end shared by the installed binary and in-process tests. */
inline int run_cli(int argc, const char* const* argv) {
  using cli_detail::emit_json;
  using cli_detail::emit_reports;

  CLI::App app{"exact calibrated-hypergraph monads and qudit states over Galois rings"};
  app.require_subcommand(1);

  std::string ring_arg = "2,1,1";
  std::string map_path, hypergraph_path, calibration_path, weighted_path, state_path;
  std::string left_path, right_path, out_path, format = "json";
  std::string fixtures_dir = "fixtures";
  std::string monad_arg = "hypergraph", which_arg = "all", kind_arg, bounds_arg;
  std::string exponent_arg = "0,3", value_arg = "0,3";
  bool inverse = false, use_ring = false;
  std::uint64_t seed = 0, cases = 200;
  std::uint32_t grade = 2, target = 2, max_grade = 2;
  double tolerance = 1e-9;

  auto* cmd_state = app.add_subcommand("state", "build a hypergraph state vector");
  cmd_state->add_option("--ring", ring_arg, "ring JSON file or inline p,r,d");
  cmd_state->add_option("--hypergraph", hypergraph_path, "hypergraph JSON file")->required();
  cmd_state->add_option("--calibration", calibration_path, "calibration JSON file");
  cmd_state->add_option("--weighted", weighted_path, "weight JSON file");
  cmd_state->add_option("--out", out_path, "output file (default stdout)");
  cmd_state->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* cmd_push = app.add_subcommand("pushforward", "apply an ordinal map to a hypergraph");
  cmd_push->add_option("--map", map_path, "ordinal map JSON file")->required();
  cmd_push->add_option("--hypergraph", hypergraph_path, "hypergraph JSON file")->required();
  cmd_push->add_option("--calibration", calibration_path, "calibration JSON file");
  cmd_push->add_option("--weighted", weighted_path, "weight JSON file");
  cmd_push->add_option("--ring", ring_arg, "ring for default calibration monoids");
  cmd_push->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_join = app.add_subcommand("join", "graded join of two values of the same kind");
  cmd_join->add_option("--left", left_path, "left JSON file")->required();
  cmd_join->add_option("--right", right_path, "right JSON file")->required();
  cmd_join->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_fourier = app.add_subcommand("fourier", "ring Fourier transform of a state vector");
  cmd_fourier->add_option("--ring", ring_arg, "ring JSON file or inline p,r,d");
  cmd_fourier->add_option("--state", state_path, "state JSON file")->required();
  cmd_fourier->add_flag("--inverse", inverse, "apply the inverse transform");
  cmd_fourier->add_option("--out", out_path, "output file (default stdout)");
  cmd_fourier->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* cmd_gen = app.add_subcommand("gen", "deterministic seeded value generator");
  cmd_gen->add_option("--kind", kind_arg, "ordinal-map|hypergraph|calibration|weight|cdit|calibrated-hypergraph")
      ->required()
      ->check(CLI::IsMember({"ordinal-map", "hypergraph", "calibration", "weight", "cdit",
                             "calibrated-hypergraph"}));
  cmd_gen->add_option("--seed", seed, "generator seed");
  cmd_gen->add_option("--grade", grade, "source grade / vertex count");
  cmd_gen->add_option("--target", target, "target grade (ordinal-map)");
  cmd_gen->add_option("--ring", ring_arg, "ring for cdit / ring-alphabet calibrations");
  cmd_gen->add_option("--exponent-monoid", exponent_arg, "exponent monoid i,c");
  cmd_gen->add_option("--value-monoid", value_arg, "value monoid i,c");
  cmd_gen->add_option("--bounds", bounds_arg, "size bounds k=v,...");
  cmd_gen->add_flag("--use-ring", use_ring, "use the ring alphabet for calibrated-hypergraph");
  cmd_gen->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_check = app.add_subcommand("check", "law and fixture checks");
  cmd_check
      ->add_option("which", which_arg,
                   "covariance|phase-pullback|multiplicativity|unit|flat|weighted-agreement|"
                   "qubit-reduction|monad-laws|morphisms|functoriality|paper-examples|all")
      ->required();
  cmd_check->add_option("--ring", ring_arg, "ring JSON file or inline p,r,d");
  cmd_check->add_option("--seed", seed, "case seed");
  cmd_check->add_option("--cases", cases, "randomized case count");
  cmd_check->add_option("--tolerance", tolerance, "numeric tolerance");
  cmd_check->add_option("--bounds", bounds_arg, "size bounds k=v,...");
  cmd_check->add_option("--monad", monad_arg,
                        "hypergraph|calibrated|weighted|configuration|state (monad-laws)");
  cmd_check->add_option("--exponent-monoid", exponent_arg, "exponent monoid i,c");
  cmd_check->add_option("--value-monoid", value_arg, "value monoid i,c");
  cmd_check->add_option("--fixtures", fixtures_dir, "fixture directory (paper-examples)");
  cmd_check->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(cmd_state)) {
      GaloisRing ring = cli_detail::parse_ring(ring_arg);
      Json h = load_json_file(hypergraph_path);
      if (!calibration_path.empty() && !weighted_path.empty())
        fail(errc::io_error, "--calibration and --weighted are mutually exclusive");
      StateVector psi = StateVector::zero(ring, 0);
      Monoid phases = phase_monoid(ring);
      if (!calibration_path.empty()) {
        Json merged = cli_detail::overlay(h, load_json_file(calibration_path),
                                          {"calibrations", "exponent_monoid", "value_monoid"});
        Monoid alphabet = ring.cyclicity_monoid();
        psi = build_state(ring, calibrated_from_json(merged, &alphabet, &phases));
      } else if (!weighted_path.empty()) {
        Json merged = cli_detail::overlay(h, load_json_file(weighted_path),
                                          {"weights", "weight_monoid"});
        psi = build_state_weighted(ring, weighted_from_json(merged, &phases));
      } else {
        // Bare hypergraph: weight every edge by 1, the classic graph-state convention.
        Hypergraph graph = hypergraph_from_json(h);
        std::map<Edge, std::uint64_t> weights;
        for (const Edge& e : graph.edges) weights[e] = 1 % phases.size();
        psi = build_state_weighted(
            ring, WeightedHypergraph::make(graph, phases, std::move(weights)));
      }
      cli_detail::emit_state(psi, format, out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_push)) {
      OrdinalMap f = ordinal_map_from_json(load_json_file(map_path));
      Json h = load_json_file(hypergraph_path);
      if (!calibration_path.empty() && !weighted_path.empty())
        fail(errc::io_error, "--calibration and --weighted are mutually exclusive");
      if (!calibration_path.empty()) {
        GaloisRing ring = cli_detail::parse_ring(ring_arg);
        Json merged = cli_detail::overlay(h, load_json_file(calibration_path),
                                          {"calibrations", "exponent_monoid", "value_monoid"});
        Monoid alphabet = ring.cyclicity_monoid();
        Monoid phases = phase_monoid(ring);
        emit_json(to_json(gc_map(f, calibrated_from_json(merged, &alphabet, &phases))), out_path);
      } else if (!weighted_path.empty()) {
        GaloisRing ring = cli_detail::parse_ring(ring_arg);
        Json merged =
            cli_detail::overlay(h, load_json_file(weighted_path), {"weights", "weight_monoid"});
        Monoid phases = phase_monoid(ring);
        emit_json(to_json(gw_map(f, weighted_from_json(merged, &phases))), out_path);
      } else {
        emit_json(to_json(hg_map(f, hypergraph_from_json(h))), out_path);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_join)) {
      Json left = load_json_file(left_path);
      Json right = load_json_file(right_path);
      std::string kind = cli_detail::detect_kind(left);
      if (kind != cli_detail::detect_kind(right))
        fail(errc::io_error, "join operands have different kinds");
      if (kind == "calibrated")
        emit_json(to_json(gc_join(calibrated_from_json(left), calibrated_from_json(right))),
                  out_path);
      else if (kind == "weighted")
        emit_json(to_json(gw_join(weighted_from_json(left), weighted_from_json(right))), out_path);
      else if (kind == "hypergraph")
        emit_json(to_json(hg_join(hypergraph_from_json(left), hypergraph_from_json(right))),
                  out_path);
      else if (kind == "cdit")
        emit_json(to_json(cdit_join(cdit_from_json(left), cdit_from_json(right))), out_path);
      else if (kind == "state") {
        StateVector l = state_from_json(left);
        emit_json(to_json(tensor_states(l, state_from_json(right, &l.ring))), out_path);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_fourier)) {
      GaloisRing ring = cli_detail::parse_ring(ring_arg);
      StateVector psi = state_from_json(load_json_file(state_path), &ring);
      cli_detail::emit_state(fourier_apply(psi, inverse), format, out_path);
      return 0;
    }

    if (app.got_subcommand(cmd_gen)) {
      GenBounds bounds;
      if (!bounds_arg.empty()) cli_detail::parse_bounds(bounds_arg, bounds, max_grade);
      auto rng = case_rng(seed, 0);
      Monoid a = cli_detail::parse_monoid(exponent_arg);
      Monoid m = cli_detail::parse_monoid(value_arg);
      if (kind_arg == "ordinal-map")
        emit_json(to_json(gen_ordinal_map(rng, grade, target)), out_path);
      else if (kind_arg == "hypergraph")
        emit_json(to_json(gen_hypergraph(rng, grade, bounds)), out_path);
      else if (kind_arg == "calibration") {
        if (grade == 0) fail(errc::io_error, "calibration domain needs grade >= 1");
        Edge domain(grade);
        for (std::uint32_t v = 0; v < grade; ++v) domain[v] = v;
        emit_json(to_json(gen_calibration(rng, a, m, domain, bounds.max_support)), out_path);
      } else if (kind_arg == "weight")
        emit_json(to_json(gen_weighted(rng, grade, m, bounds)), out_path);
      else if (kind_arg == "cdit")
        emit_json(to_json(gen_cdit(rng, cli_detail::parse_ring(ring_arg), grade)), out_path);
      else if (kind_arg == "calibrated-hypergraph") {
        if (use_ring)
          emit_json(
              to_json(gen_ring_calibrated(rng, cli_detail::parse_ring(ring_arg), grade, bounds)),
              out_path);
        else
          emit_json(to_json(gen_calibrated(rng, grade, a, m, bounds)), out_path);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_check)) {
      LawConfig cfg;
      cfg.seed = seed;
      cfg.cases = cases;
      cfg.tolerance = tolerance;
      cfg.exponent_monoid = cli_detail::parse_monoid(exponent_arg);
      cfg.value_monoid = cli_detail::parse_monoid(value_arg);
      if (!bounds_arg.empty()) cli_detail::parse_bounds(bounds_arg, cfg.gen, cfg.max_grade);

      if (which_arg == "paper-examples") {
        auto results = run_fixture_dir(fixtures_dir);
        bool all = true;
        Json arr = Json::array();
        for (const FixtureResult& r : results) {
          all = all && r.passed;
          if (format == "json")
            arr.push_back(Json{{"fixture", r.name}, {"passed", r.passed}, {"detail", r.detail}});
          else
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                      << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
        if (format == "json") std::cout << arr.dump(2) << "\n";
        return all ? 0 : 1;
      }

      std::vector<CheckReport> reports;
      GaloisRing ring = cli_detail::parse_ring(ring_arg);
      cfg.ring = ring;
      bool run_all = which_arg == "all";
      if (run_all || which_arg == "covariance")
        reports.push_back(check_state_covariance(ring, cfg));
      if (run_all || which_arg == "phase-pullback")
        reports.push_back(check_state_phase_pullback(ring, cfg));
      if (run_all || which_arg == "multiplicativity")
        reports.push_back(check_state_multiplicativity(ring, cfg));
      if (run_all || which_arg == "unit") reports.push_back(check_state_unit(ring, cfg.tolerance));
      if (run_all || which_arg == "flat") reports.push_back(check_state_flatness(ring, cfg));
      if (run_all || which_arg == "weighted-agreement")
        reports.push_back(check_weighted_agreement(ring, cfg));
      if (run_all || which_arg == "qubit-reduction") {
        reports.push_back(check_qubit_reduction_exhaustive(2, 2, cfg.tolerance));
        reports.push_back(check_qubit_reduction_random(3, cfg));
      }
      if (run_all || which_arg == "monad-laws") {
        auto tag_of = [](const std::string& name) -> std::optional<MonadTag> {
          if (name == "hypergraph" || name == "g") return MonadTag::hypergraph;
          if (name == "calibrated" || name == "gc") return MonadTag::calibrated;
          if (name == "weighted" || name == "gw") return MonadTag::weighted;
          if (name == "configuration" || name == "e") return MonadTag::configuration;
          if (name == "state" || name == "he") return MonadTag::state;
          return std::nullopt;
        };
        if (run_all) {
          for (MonadTag tag : {MonadTag::hypergraph, MonadTag::calibrated, MonadTag::weighted,
                               MonadTag::configuration, MonadTag::state})
            for (CheckReport& r : check_monad_laws(tag, cfg)) reports.push_back(std::move(r));
        } else {
          auto tag = tag_of(monad_arg);
          if (!tag) fail(errc::io_error, "unknown monad: " + monad_arg);
          for (CheckReport& r : check_monad_laws(*tag, cfg)) reports.push_back(std::move(r));
        }
      }
      if (run_all || which_arg == "morphisms")
        for (MorphismTag tag :
             {MorphismTag::weight_of_calibration, MorphismTag::calibrated_projection,
              MorphismTag::weighted_projection})
          for (CheckReport& r : check_morphism_laws(tag, cfg)) reports.push_back(std::move(r));
      if (run_all || which_arg == "functoriality")
        for (CheckReport& r : check_pushforward_functoriality(cfg)) reports.push_back(std::move(r));
      if (reports.empty()) fail(errc::io_error, "unknown check: " + which_arg);
      return emit_reports(reports, format) ? 0 : 1;
    }

    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hypermonad
