#include <CLI11.hpp>
#include <json.hpp>

#include "lsa/diagram.hpp"
#include "lsa/invariants.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace lsa;

namespace
{

  struct RunConfig
  {
    std::string family = "all";
    std::size_t max_rank = 3;
    std::string grading = "all";
    std::size_t samples = 3;
    unsigned seed = 1;
    std::string format = "table";
    std::string out;
    std::string diagram_file;
    std::string mixture;
  };

  std::vector<Family> family_filter(const std::string & name)
  {
    if (name == "all")
      return {Family::gl, Family::osp_odd, Family::osp_even, Family::spo};
    auto f = family_from_name(name);
    if (!f) throw CLI::ValidationError("--family", "unknown family " + name);
    return {*f};
  }

  std::string grading_string(const GradingVector & g)
  {
    std::string s;
    for (int b : g) s += char('0' + b);
    return s;
  }

  bool grading_matches(const std::string & filter, const GradingVector & g)
  {
    return filter == "all" || filter == grading_string(g);
  }

  int family_order(Family f)
  {
    switch (f) {
    case Family::gl: return 0;
    case Family::osp_odd: return 1;
    case Family::osp_even: return 2;
    case Family::spo: return 3;
    }
    return 4;
  }

  std::vector<std::size_t> black_set(const DecoratedDiagram & d)
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.rank; i++)
      if (d.black[i]) out.push_back(i);
    return out;
  }

  bool diagram_before(const DecoratedDiagram & a, const DecoratedDiagram & b)
  {
    auto key = [](const DecoratedDiagram & d) {
      return std::make_tuple(family_order(d.family), d.rank, grading_string(d.grading),
                             black_set(d), d.tau);
    };
    return key(a) < key(b);
  }

  TripleCandidate candidate_of(const DecoratedDiagram & d)
  {
    TripleCandidate t;
    t.algebra = std::make_shared<AlgebraData>(build_algebra(d.family, d.grading));
    t.levi.black = d.black;
    t.tau = d.tau;
    return t;
  }

  /// All super-symmetric candidates, including the ones the rules reject.
  std::vector<DecoratedDiagram> collect_candidates(const RunConfig & cfg)
  {
    std::vector<DecoratedDiagram> out;
    for (Family family : family_filter(cfg.family)) {
      std::size_t min_rank = family == Family::osp_even ? 2 : 1;
      for (std::size_t rank = min_rank; rank <= cfg.max_rank; rank++) {
        for (const auto & grading : gradings_for(family, rank)) {
          if (!grading_matches(cfg.grading, grading)) continue;
          if (family == Family::gl && cfg.grading == "all") {
            GradingVector flipped = grading;
            for (int & b : flipped) b = 1 - b;
            if (flipped < grading) continue; // parity flip gives the same algebra
          }
          auto alg = std::make_shared<AlgebraData>(build_algebra(family, grading));
          for (std::size_t mask = 0; mask + 1 < (1u << rank); mask++) {
            LeviChoice levi;
            for (std::size_t i = 0; i < rank; i++) levi.black.push_back(mask & (1u << i));
            for (const auto & cand : enumerate_taus(alg, levi))
              out.push_back(build_ddd(cand));
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), diagram_before);
    return out;
  }

  void emit(const RunConfig & cfg, const std::string & text)
  {
    if (cfg.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
  }

  std::string table_row(const DecoratedDiagram & d)
  {
    std::string blacks, arcs;
    for (std::size_t b : black_set(d)) blacks += (blacks.empty() ? "" : ",") + std::to_string(b);
    for (std::size_t i = 0; i < d.rank; i++)
      if (d.tau[i] > i)
        arcs += (arcs.empty() ? "" : ",") + std::to_string(i) + "-" + std::to_string(d.tau[i]);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-9s %-2s %4zu  %-12s %-10s %-10s %s",
                  family_name(d.family).c_str(), shape_name(d.shape).c_str(), d.rank,
                  grading_string(d.grading).c_str(), blacks.empty() ? "-" : blacks.c_str(),
                  arcs.empty() ? "-" : arcs.c_str(), d.label.c_str());
    return buf;
  }

  int cmd_enumerate(const RunConfig & cfg)
  {
    std::vector<DecoratedDiagram> diagrams;
    for (Family family : family_filter(cfg.family))
      for (auto & d : enumerate_satake(family, cfg.max_rank))
        if (grading_matches(cfg.grading, d.grading)) diagrams.push_back(std::move(d));
    std::sort(diagrams.begin(), diagrams.end(), diagram_before);

    std::string text;
    if (cfg.format == "dot") {
      for (const auto & d : diagrams) text += to_dot(d);
    } else if (cfg.format == "json") {
      nlohmann::json j;
      j["command"] = "enumerate";
      j["count"] = diagrams.size();
      j["diagrams"] = nlohmann::json::array();
      for (const auto & d : diagrams)
        j["diagrams"].push_back(nlohmann::json::parse(diagram_to_json(d)));
      text = j.dump(2) + "\n";
    } else {
      text = "family    sh rank  grading      black      tau        label\n";
      for (const auto & d : diagrams) text += table_row(d) + "\n";
      text += std::to_string(diagrams.size()) + " diagrams\n";
    }
    emit(cfg, text);
    return 0;
  }

  nlohmann::json sample_json(const NontrivialSample & s)
  {
    nlohmann::json j;
    j["c"] = nlohmann::json::array();
    for (const auto & v : s.c) j["c"].push_back(v.str());
    j["dim_g"] = s.dim_g;
    j["dim_k"] = s.dim_k;
    j["proper"] = s.proper;
    j["spherical"] = s.spherical;
    return j;
  }

  int cmd_verify(const RunConfig & cfg)
  {
    std::vector<DecoratedDiagram> diagrams;
    if (!cfg.diagram_file.empty()) {
      std::ifstream f(cfg.diagram_file);
      if (!f) {
        std::cerr << "cannot read " << cfg.diagram_file << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << f.rdbuf();
      diagrams.push_back(diagram_from_json(ss.str()));
    } else {
      diagrams = collect_candidates(cfg);
    }

    nlohmann::json rows = nlohmann::json::array();
    std::string table = "family    sh rank  grading      black      tau        label"
                        "        rules verdict\n";
    bool all_ok = true;
    std::string first_failure;
    for (const auto & d : diagrams) {
      TripleCandidate t = candidate_of(d);
      bool accepted = selection_rules(d).passes;
      auto report = verify_nontrivial(t, cfg.samples, cfg.seed);

      bool every_proper = true, every_trivial = true, every_spherical = true;
      for (const auto & s : report.samples) {
        every_proper = every_proper && s.proper;
        every_trivial = every_trivial && !s.proper;
        every_spherical = every_spherical && s.spherical;
      }
      bool ok = every_spherical && (accepted ? every_proper : every_trivial);
      all_ok = all_ok && ok;
      if (!ok && first_failure.empty()) first_failure = diagram_to_json(d);

      nlohmann::json row;
      row["diagram"] = nlohmann::json::parse(diagram_to_json(d));
      row["rules_pass"] = accepted;
      row["samples"] = nlohmann::json::array();
      for (const auto & s : report.samples) row["samples"].push_back(sample_json(s));
      row["ok"] = ok;
      rows.push_back(std::move(row));

      table += table_row(d);
      table += accepted ? "  pass " : "  fail ";
      table += ok ? "ok\n" : "MISMATCH\n";
    }

    if (cfg.format == "json") {
      nlohmann::json j;
      j["command"] = "verify";
      j["seed"] = cfg.seed;
      j["samples"] = cfg.samples;
      j["rows"] = rows;
      j["all_ok"] = all_ok;
      emit(cfg, j.dump(2) + "\n");
    } else {
      table += all_ok ? "all verified\n" : "verification failed\n";
      emit(cfg, table);
    }
    if (!all_ok) std::cerr << "first failing diagram:\n" << first_failure << "\n";
    return all_ok ? 0 : 1;
  }

  MixtureVector parse_mixture(const TripleCandidate & t, const RunConfig & cfg)
  {
    MixtureVector mv;
    auto whites = t.white_positions();
    if (cfg.mixture.empty()) {
      static const std::vector<Rational> pool = {
        Rational(1), Rational(-1), Rational(2), Rational(-2),
        Rational(1) / 2, Rational(-1) / 2, Rational(3), Rational(-3)};
      std::mt19937 rng(cfg.seed);
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (std::size_t p : whites)
        mv.c[p] = t.tau[p] < p ? mv.c[t.tau[p]] : pool[pick(rng)];
      return mv;
    }
    std::stringstream ss(cfg.mixture);
    std::string item;
    std::vector<Rational> values;
    while (std::getline(ss, item, ',')) values.emplace_back(item);
    if (values.size() != whites.size())
      throw std::invalid_argument("need one coefficient per white node");
    for (std::size_t i = 0; i < whites.size(); i++) mv.c[whites[i]] = values[i];
    return mv;
  }

  int cmd_invariants(const RunConfig & cfg)
  {
    if (cfg.diagram_file.empty()) {
      std::cerr << "invariants requires --diagram\n";
      return 2;
    }
    std::ifstream f(cfg.diagram_file);
    if (!f) {
      std::cerr << "cannot read " << cfg.diagram_file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    DecoratedDiagram d = diagram_from_json(ss.str());
    TripleCandidate t = candidate_of(d);
    MixtureVector mv = parse_mixture(t, cfg);

    auto k = lie_closure(mixed_generators(t, mv));
    nlohmann::json j;
    j["command"] = "invariants";
    j["diagram"] = nlohmann::json::parse(diagram_to_json(d));
    j["c"] = nlohmann::json::array();
    for (std::size_t p : t.white_positions()) j["c"].push_back(mv.at(p).str());
    j["dim_k"] = k.dimension;

    nlohmann::json dims;
    auto adjoint = solve_invariants(k, ActionKind::adjoint, 0);
    auto twisted = solve_invariants(k, ActionKind::form_twisted, 0);
    dims["adjoint_even"] = adjoint.dimension;
    dims["form_twisted_even"] = twisted.dimension;
    if (t.alg().N % 2 == 0)
      dims["d_twisted_even"] = solve_invariants(k, ActionKind::d_twisted, 0).dimension;
    j["dimensions"] = dims;

    auto dump_basis = [](const InvariantSpace & space) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto & m : space.basis) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size(); i++) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t c = 0; c < m.size(); c++) row.push_back(m.mat.at(i, c).str());
          rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
      }
      return out;
    };
    j["adjoint_basis"] = dump_basis(adjoint);
    j["form_twisted_basis"] = dump_basis(twisted);

    // paper-formula membership checks where a closed form applies
    nlohmann::json checks = nlohmann::json::array();
    bool all_pass = true;
    auto add_check = [&](const std::string & name, bool pass, const std::string & note = "") {
      nlohmann::json c;
      c["check"] = name;
      c["pass"] = pass;
      if (!note.empty()) c["note"] = note;
      checks.push_back(std::move(c));
      all_pass = all_pass && pass;
    };

    try {
      auto ks = lie_closure(shaft_generators(t, mv));
      auto A = shaft_invariant(t, mv);
      add_check("shaft-block-invariant", is_invariant(ks, ActionKind::form_twisted, A));
    } catch (const std::invalid_argument &) {
    }

    if (d.family == Family::gl && d.rank == 1 && d.parity[0] == 1) {
      const auto & root = t.alg().simple(0);
      auto M = root.e - root.f.scaled(mv.at(0));
      add_check("rank1-odd-adjoint-invariant", is_invariant(k, ActionKind::adjoint, M));
    }

    if (d.label == "outstanding" && d.rank == 3 && d.grading == GradingVector{0, 0, 1, 1}) {
      const GradingVector & g = t.alg().grading;
      Rational c2 = mv.at(1);
      auto M = unit_matrix(4, g, 0, 1) - unit_matrix(4, g, 1, 0)
               - unit_matrix(4, g, 2, 3, c2) + unit_matrix(4, g, 3, 2, c2);
      add_check("outstanding-twisted-invariant",
                is_invariant(k, ActionKind::form_twisted, M),
                "holds only for the parity-conjugated plain transpose");
    }

    try {
      auto kt = lie_closure(black_tail_generators(t, mv.at(t.white_positions().front())));
      auto A = black_tail_invariant(t, mv.at(t.white_positions().front()), 1);
      add_check("black-tail-adjoint-invariant", is_invariant(kt, ActionKind::adjoint, A));
    } catch (const std::invalid_argument &) {
    }

    j["checks"] = checks;
    j["all_checks_pass"] = all_pass;

    if (cfg.format == "table") {
      std::string text = table_row(d) + "\n";
      text += "dim k = " + std::to_string(k.dimension) + "\n";
      for (auto & [key, val] : dims.items())
        text += key + " = " + val.dump() + "\n";
      for (const auto & c : checks)
        text += c["check"].get<std::string>() + ": "
                + (c["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
      emit(cfg, text);
    } else {
      emit(cfg, j.dump(2) + "\n");
    }
    return all_pass ? 0 : 1;
  }

}

int main(int argc, char ** argv)
{
  CLI::App app{"graded Satake diagrams and spherical subalgebra verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App * sub) {
    sub->add_option("--family", cfg.family, "gl, osp-odd, osp-even, spo, or all");
    sub->add_option("--max-rank", cfg.max_rank, "largest diagram rank")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grading", cfg.grading, "parity bitstring or all");
    sub->add_option("--samples", cfg.samples, "mixture samples per diagram")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--format", cfg.format, "json, table, or dot")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--diagram", cfg.diagram_file, "single diagram JSON file");
    sub->add_option("--c", cfg.mixture, "comma-separated mixture coefficients");
  };
  add_common(app.add_subcommand("enumerate", "list Satake diagrams"));
  add_common(app.add_subcommand("verify", "check properness and sphericity"));
  add_common(app.add_subcommand("invariants", "solve matrix invariant spaces"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("enumerate")) return cmd_enumerate(cfg);
    if (app.got_subcommand("verify")) return cmd_verify(cfg);
    return cmd_invariants(cfg);
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
