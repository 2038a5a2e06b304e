#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdl/all.hpp"

namespace wdl::cli {

using nlohmann::ordered_json;

namespace detail {

inline ordered_json labels_json(const BoundedLattice& l, const ElementSet& s) {
  ordered_json out = ordered_json::array();
  s.for_each([&](Element x) { out.push_back(l.label(x)); });
  return out;
}

inline ordered_json blocks_json(const BoundedLattice& l, const Partition& p) {
  ordered_json out = ordered_json::array();
  for (const auto& b : p.blocks()) out.push_back(labels_json(l, b));
  return out;
}

inline std::string blocks_text(const BoundedLattice& l, const Partition& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& b : p.blocks()) {
    out += (first ? "" : ", ") + set_label(l, b);
    first = false;
  }
  return out + "]";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Wdl load_wdl(const std::string& path) { return load_lat_json(path).to_wdl(); }

/// Comma-separated element labels; an unknown label is read as an index.
inline ElementSet resolve_elements(const BoundedLattice& l, const std::string& spec) {
  ElementSet out(l.size());
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    if (auto e = l.find_label(tok)) {
      out.insert(*e);
      continue;
    }
    const bool digits =
        std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!digits || tok.size() > 9 || std::stoul(tok) >= l.size())
      throw Error(Errc::unknown_name, "no element named '" + tok + "'");
    out.insert(static_cast<Element>(std::stoul(tok)));
  }
  return out;
}

inline std::string skeleton_kind(bool boolean, bool ortho) {
  if (boolean) return "Boolean";
  return ortho ? "ortholattice" : "neither";
}

/// Writes to `path` or, when empty, to `out`.
inline void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
  f << text;
}

inline int print_suite(std::ostream& out, const std::vector<std::pair<std::string, Wdl>>& algebras,
                       bool as_json) {
  bool failed = false;
  ordered_json report = ordered_json::array();
  for (const auto& [name, w] : algebras) {
    auto results = run_theorem_suite(w);
    ordered_json checks = ordered_json::array();
    for (const auto& r : results) {
      failed |= r.status == CheckStatus::fail;
      if (as_json) {
        checks.push_back({{"id", r.id},
                          {"status", std::string(to_string(r.status))},
                          {"instances", r.instances},
                          {"detail", r.detail}});
        continue;
      }
      out << name << ' ';
      switch (r.status) {
        case CheckStatus::pass: out << "PASS " << r.id << " (" << r.instances << " instances)\n"; break;
        case CheckStatus::fail: out << "FAIL " << r.id << ": " << r.detail << '\n'; break;
        case CheckStatus::skipped: out << "SKIP " << r.id << ": " << r.detail << '\n'; break;
      }
    }
    if (as_json) report.push_back({{"name", name}, {"size", w.size()}, {"checks", checks}});
  }
  if (as_json) out << report.dump(2) << '\n';
  return failed ? 1 : 0;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error or failed check, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite weakly dicomplemented lattices", "wdl"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string file, file2, output, filter;
  std::size_t k = 0;
  bool by_detcon = false, all_catalog = false;
  std::size_t random_count = 0;
  std::uint64_t seed = 0;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "machine-readable output"); };
  auto add_output = [&](CLI::App* c) {
    c->add_option("-o,--output", output, "write the .lat.json here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "axiom report");
  check->add_option("file", file, ".lat.json file")->required();
  add_json(check);

  auto* cls = app.add_subcommand("classify", "Boolean / S-Boolean / pure classification");
  cls->add_option("file", file)->required();
  add_json(cls);

  auto* skel = app.add_subcommand("skeleton", "skeletons, center and dense sets");
  skel->add_option("file", file)->required();
  add_json(skel);

  auto* nf = app.add_subcommand("nf", "normal filters and normal ideals");
  nf->add_option("file", file)->required();
  add_json(nf);
  add_output(nf);

  auto* con = app.add_subcommand("con", "congruence lattice");
  con->add_option("file", file)->required();
  add_json(con);

  auto* quo = app.add_subcommand("quotient", "quotient by theta_F or by Phi");
  quo->add_option("file", file)->required();
  auto* filter_opt = quo->add_option("--filter", filter, "normal filter as comma-separated labels");
  auto* detcon_opt = quo->add_flag("--by-detcon", by_detcon, "quotient by Phi");
  filter_opt->excludes(detcon_opt);
  add_json(quo);
  add_output(quo);

  auto* prod = app.add_subcommand("product", "direct product of two algebras");
  prod->add_option("first", file)->required();
  prod->add_option("second", file2)->required();
  add_json(prod);
  add_output(prod);

  auto* pow = app.add_subcommand("power", "k-th direct power");
  pow->add_option("file", file)->required();
  pow->add_option("k", k)->required()->check(CLI::PositiveNumber);
  add_json(pow);
  add_output(pow);

  auto* chn = app.add_subcommand("chain", "n-element chain");
  chn->add_option("n", k)->required();
  add_json(chn);
  add_output(chn);

  std::string cat_name;
  auto* cat = app.add_subcommand("catalog", "built-in example");
  cat->add_option("name", cat_name)->required();
  add_json(cat);
  add_output(cat);

  auto* fca = app.add_subcommand("fca", "concept algebra of a .cxt context");
  fca->add_option("file", file)->required();
  add_json(fca);
  add_output(fca);

  auto* ver = app.add_subcommand("verify", "run the structure-theorem suite");
  ver->add_option("file", file);
  ver->add_flag("--all-catalog", all_catalog, "run on every catalog entry");
  ver->add_option("--random", random_count, "also run on N random distributive algebras");
  ver->add_option("--seed", seed, "seed for --random")->default_val(0);
  add_json(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) {
      auto f = load_lat_json(file);
      if (!f.has_dicomplementation())
        throw Error(Errc::invalid_argument, "'" + f.name + "' has no delta/nabla tables");
      auto rep = check_axioms(f.lattice, *f.delta, *f.nabla);
      const auto& l = f.lattice;
      if (as_json) {
        ordered_json axioms = ordered_json::array();
        for (const auto& s : rep.axioms) {
          ordered_json w = ordered_json::array();
          for (auto x : s.witness) w.push_back(l.label(x));
          axioms.push_back({{"id", std::string(axiom_id(s.axiom))}, {"holds", s.holds}, {"witness", w}});
        }
        out << ordered_json{{"name", f.name}, {"size", l.size()}, {"wdl", rep.ok()}, {"axioms", axioms}}
                   .dump(2)
            << '\n';
      } else if (rep.ok()) {
        out << "WDL: all 6 axioms hold\n";
      } else {
        out << "not a WDL:\n";
        for (const auto& s : rep.axioms) {
          if (s.holds) continue;
          out << "  axiom (" << axiom_id(s.axiom) << ") " << axiom_statement(s.axiom) << " fails at (";
          for (std::size_t i = 0; i < s.witness.size(); ++i)
            out << (i ? ", " : "") << l.label(s.witness[i]);
          out << ")\n";
        }
      }
      return rep.ok() ? 0 : 1;
    }

    if (cls->parsed()) {
      auto w = detail::load_wdl(file);
      auto c = classify(w);
      const auto& l = w.lattice();
      if (as_json) {
        out << ordered_json{{"name", w.name()},
                            {"distributive", c.distributive},
                            {"boolean", c.boolean_wdl},
                            {"s_boolean", c.s_boolean},
                            {"weak_s_boolean", c.weak_s_boolean},
                            {"pure", c.pure},
                            {"skeleton", detail::labels_json(l, c.skeleton)},
                            {"dual_skeleton", detail::labels_json(l, c.dual_skeleton)},
                            {"center", detail::labels_json(l, c.center)},
                            {"skeleton_is_boolean", c.skeleton_is_boolean},
                            {"dual_skeleton_is_boolean", c.dual_skeleton_is_boolean},
                            {"skeleton_is_ortholattice", c.skeleton_is_ortholattice},
                            {"dual_skeleton_is_ortholattice", c.dual_skeleton_is_ortholattice}}
                   .dump(2)
            << '\n';
        return 0;
      }
      std::string kind = c.s_boolean ? "S-Boolean" : c.weak_s_boolean ? "weakly S-Boolean" : "not S-Boolean";
      out << kind << ", " << (c.boolean_wdl ? "Boolean" : "not Boolean") << ", "
          << (c.pure ? "pure" : "not pure") << "; S=" << set_label(l, c.skeleton) << " ("
          << detail::skeleton_kind(c.skeleton_is_boolean, c.skeleton_is_ortholattice) << "), S̄="
          << set_label(l, c.dual_skeleton) << " ("
          << detail::skeleton_kind(c.dual_skeleton_is_boolean, c.dual_skeleton_is_ortholattice)
          << ")\n";
      out << "distributive: " << detail::yes_no(c.distributive) << "; B=" << set_label(l, c.center)
          << '\n';
      return 0;
    }

    if (skel->parsed()) {
      auto w = detail::load_wdl(file);
      auto c = classify(w);
      const auto& l = w.lattice();
      const auto b = center(w), d = dense(w), dd = dual_dense(w);
      if (as_json) {
        auto entry = [&](const ElementSet& s, bool boolean, std::optional<bool> ortho) {
          ordered_json j{{"elements", detail::labels_json(l, s)}, {"boolean", boolean}};
          if (ortho) j["ortholattice"] = *ortho;
          return j;
        };
        out << ordered_json{{"name", w.name()},
                            {"skeleton", entry(c.skeleton, c.skeleton_is_boolean, c.skeleton_is_ortholattice)},
                            {"dual_skeleton", entry(c.dual_skeleton, c.dual_skeleton_is_boolean,
                                                    c.dual_skeleton_is_ortholattice)},
                            {"center", entry(b, is_boolean_on(w, b), std::nullopt)},
                            {"dense", detail::labels_json(l, d)},
                            {"dual_dense", detail::labels_json(l, dd)}}
                   .dump(2)
            << '\n';
        return 0;
      }
      auto flags = [](bool boolean, bool ortho) {
        return std::string(boolean ? "Boolean" : "not Boolean") + ", " +
               (ortho ? "ortholattice" : "not an ortholattice");
      };
      out << "S  = " << set_label(l, c.skeleton) << " ("
          << flags(c.skeleton_is_boolean, c.skeleton_is_ortholattice) << ")\n";
      out << "S̄  = " << set_label(l, c.dual_skeleton) << " ("
          << flags(c.dual_skeleton_is_boolean, c.dual_skeleton_is_ortholattice) << ")\n";
      out << "B  = " << set_label(l, b) << " (" << (is_boolean_on(w, b) ? "Boolean" : "not Boolean")
          << ")\n";
      out << "D  = " << set_label(l, d) << '\n';
      out << "D̄  = " << set_label(l, dd) << '\n';
      return 0;
    }

    if (nf->parsed()) {
      auto w = detail::load_wdl(file);
      const auto& l = w.lattice();
      const auto filters = all_normal_filters(w);
      const auto ideals = all_normal_ideals(w);
      const auto iso = check_nf_ni_isomorphism(w);
      const auto maximal = maximal_normal_filters(w);
      const bool semisimple = is_semisimple(w);
      if (!output.empty()) detail::emit(out, output, emit_lat_json("NF(" + w.name() + ")", nf_lattice(w)));
      if (as_json) {
        ordered_json jf = ordered_json::array(), ji = ordered_json::array(), jm = ordered_json::array();
        for (const auto& f : filters) jf.push_back(detail::labels_json(l, f));
        for (const auto& i : ideals) ji.push_back(detail::labels_json(l, i));
        for (const auto& m : maximal) jm.push_back(detail::labels_json(l, m));
        out << ordered_json{{"name", w.name()},
                            {"normal_filters", jf},
                            {"normal_ideals", ji},
                            {"nf_ni_isomorphic", iso.isomorphic},
                            {"maximal_normal_filters", jm},
                            {"semisimple", semisimple}}
                   .dump(2)
            << '\n';
        return 0;
      }
      out << "NF(L) (" << filters.size() << "):\n";
      for (const auto& f : filters) out << "  " << set_label(l, f) << '\n';
      out << "NI(L) (" << ideals.size() << "):\n";
      for (const auto& i : ideals) out << "  " << set_label(l, i) << '\n';
      out << "NF(L) isomorphic to NI(L): " << detail::yes_no(iso.isomorphic) << '\n';
      out << "maximal proper normal filters:";
      for (const auto& m : maximal) out << ' ' << set_label(l, m);
      out << "\nsemisimple: " << detail::yes_no(semisimple) << '\n';
      return 0;
    }

    if (con->parsed()) {
      auto w = detail::load_wdl(file);
      const auto& l = w.lattice();
      const auto cl = all_congruences(w);
      const bool regular = is_regular(w), simple = cl.size() == 2, semisimple = is_semisimple(w);
      const auto si = is_subdirectly_irreducible(w);
      if (as_json) {
        ordered_json jc = ordered_json::array();
        for (const auto& p : cl.congruences) jc.push_back(detail::blocks_json(l, p));
        out << ordered_json{{"name", w.name()},
                            {"congruences", jc},
                            {"count", cl.size()},
                            {"regular", regular},
                            {"simple", simple},
                            {"subdirectly_irreducible", si.subdirectly_irreducible},
                            {"semisimple", semisimple},
                            {"monolith", si.monolith ? detail::blocks_json(l, *si.monolith)
                                                     : ordered_json(nullptr)},
                            {"detcon", detail::blocks_json(l, detcon(w))}}
                   .dump(2)
            << '\n';
        return 0;
      }
      out << "Con(L) (" << cl.size() << "):\n";
      for (const auto& p : cl.congruences) out << "  " << detail::blocks_text(l, p) << '\n';
      out << "regular: " << detail::yes_no(regular) << '\n';
      out << "simple: " << detail::yes_no(simple) << '\n';
      out << "subdirectly irreducible: " << detail::yes_no(si.subdirectly_irreducible);
      if (si.monolith) out << "; monolith " << detail::blocks_text(l, *si.monolith);
      out << "\nsemisimple: " << detail::yes_no(semisimple) << '\n';
      return 0;
    }

    if (quo->parsed()) {
      if (filter.empty() == !by_detcon)
        throw Error(Errc::invalid_argument, "give exactly one of --filter or --by-detcon");
      auto w = detail::load_wdl(file);
      Partition theta;
      if (by_detcon) {
        theta = detcon(w);
      } else {
        auto f = detail::resolve_elements(w.lattice(), filter);
        if (f.empty()) throw Error(Errc::empty_set, "--filter names no element");
        theta = theta_filter(w, f);
      }
      auto q = quotient(w, theta);
      auto name = w.name() + "/" + (by_detcon ? std::string("Phi") : "theta");
      auto alg = q.algebra.renamed(name);
      if (as_json)
        detail::emit(out, output,
                     ordered_json{{"name", name},
                                  {"blocks", detail::blocks_json(w.lattice(), theta)},
                                  {"algebra", ordered_json::parse(emit_lat_json(alg))}}
                             .dump(2) +
                         "\n");
      else
        detail::emit(out, output, emit_lat_json(alg));
      return 0;
    }

    auto emit_algebra = [&](const Wdl& w) {
      detail::emit(out, output, emit_lat_json(w));
      return 0;
    };
    if (prod->parsed()) return emit_algebra(product(detail::load_wdl(file), detail::load_wdl(file2)));
    if (pow->parsed()) return emit_algebra(power(detail::load_wdl(file), k));
    if (chn->parsed()) {
      if (k < 2) throw Error(Errc::invalid_argument, "a chain needs at least 2 elements");
      if (k > kMaxCarrier) throw Error(Errc::cap_exceeded, "chain length exceeds the carrier cap");
      return emit_algebra(chain(k));
    }
    if (cat->parsed()) return emit_algebra(catalog(cat_name));

    if (fca->parsed()) {
      auto ctx = parse_cxt(read_file(file));
      auto cs = concepts(ctx);
      auto w = concept_algebra(ctx);
      if (!as_json) {
        detail::emit(out, output, emit_lat_json(w));
        err << cs.size() << " concepts\n";
        return 0;
      }
      ordered_json jc = ordered_json::array();
      for (const auto& c : cs) {
        ordered_json ext = ordered_json::array(), in = ordered_json::array();
        c.extent.for_each([&](Element g) { ext.push_back(ctx.objects()[g]); });
        c.intent.for_each([&](Element m) { in.push_back(ctx.attributes()[m]); });
        jc.push_back({{"extent", ext}, {"intent", in}});
      }
      detail::emit(out, output,
                   ordered_json{{"concept_count", cs.size()},
                                {"concepts", jc},
                                {"algebra", ordered_json::parse(emit_lat_json(w))}}
                           .dump(2) +
                       "\n");
      return 0;
    }

    if (ver->parsed()) {
      if (file.empty() && !all_catalog && random_count == 0)
        throw Error(Errc::invalid_argument, "give a file, --all-catalog or --random N");
      std::vector<std::pair<std::string, Wdl>> algebras;
      if (!file.empty()) {
        auto w = detail::load_wdl(file);
        algebras.emplace_back(w.name(), w);
      }
      if (all_catalog)
        for (const auto& n : catalog_names()) algebras.emplace_back(n, catalog(n));
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < random_count; ++i) {
        auto w = random_distributive_wdl(rng);
        algebras.emplace_back("random#" + std::to_string(i), w);
      }
      return detail::print_suite(out, algebras, as_json);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace wdl::cli
