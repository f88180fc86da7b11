// Command-line front end: concept lattices, Dedekind-MacNeille
// completions, singular-value nuclei, Chu reductions, and the
// categorical nucleus pipeline over JSON bundles.
//
// Exit codes: 0 success with no violations, 1 law violations (reports
// still emitted), 2 parse/structural errors, 3 undecided search
// outcomes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nucleus/adjunction.hpp"
#include "nucleus/chu.hpp"
#include "nucleus/concept.hpp"
#include "nucleus/fincat.hpp"
#include "nucleus/json_io.hpp"
#include "nucleus/linalg.hpp"

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  double tol = 1e-10;
  bool karoubi = false;
  long long search_cap = fincat::kDefaultSearchCap;
  std::string left_name, right_name;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out);
    f << text;
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file " + path);
  return f;
}

ojson report_json(const fincat::Report& rep) {
  ojson out = ojson::array();
  for (const auto& v : rep) {
    ojson e;
    e["law"] = v.law;
    e["location"] = v.location;
    e["status"] = "violated";
    out.push_back(e);
  }
  return out;
}

int finish_with_report(const Options& opt, ojson& out, const fincat::Report& rep) {
  out["report"] = report_json(rep);
  out["status"] = rep.empty() ? "ok" : "violations";
  emit(opt, out.dump(2) + "\n");
  return rep.empty() ? 0 : 1;
}

int run_fca(const Options& opt) {
  auto in = open_input(opt.input);
  fca::Context ctx;
  if (opt.input.size() >= 4 && opt.input.substr(opt.input.size() - 4) == ".cxt")
    ctx = fca::parse_cxt(in);
  else
    ctx = fca::parse_context_csv(in);
  auto valid = fca::validate_context(ctx);
  if (!valid.empty()) {
    std::cerr << "context invalid (" << opt.input << "):\n" << fincat::report_to_string(valid);
    return 2;
  }
  auto lattice = fca::concept_lattice(ctx);
  fincat::Report rep = fca::verify_lattice(ctx, lattice);
  if (opt.format == "dot") {
    emit(opt, fca::hasse_dot(ctx, lattice));
    return rep.empty() ? 0 : 1;
  }
  ojson out = ojson::parse(fca::concepts_to_json(ctx, lattice));
  return finish_with_report(opt, out, rep);
}

int run_dm(const Options& opt) {
  auto in = open_input(opt.input);
  fca::Poset p = fca::parse_poset_json(in);
  auto dm = fca::dedekind_macneille(p);
  fca::Context ctx;  // rebuild the DM context for emission
  ctx.objects = p.elements;
  ctx.attributes = p.elements;
  ctx.order_objects = p.leq;
  ctx.order_attributes = p.leq;
  ctx.rows.assign(p.n(), fca::Bitset(p.n()));
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.leq[i][j]) ctx.rows[i].set(j);
  if (opt.format == "dot") {
    emit(opt, fca::hasse_dot(ctx, dm.lattice));
    return dm.report.empty() ? 0 : 1;
  }
  ojson out = ojson::parse(fca::concepts_to_json(ctx, dm.lattice));
  ojson emb = ojson::object();
  for (int x = 0; x < p.n(); ++x) emb[p.elements[x]] = dm.embedding[x];
  out["embedding"] = emb;
  return finish_with_report(opt, out, dm.report);
}

int run_svd(const Options& opt) {
  auto in = open_input(opt.input);
  lin::DenseMatrix m = lin::parse_matrix_csv(in);
  auto n = lin::svd_nucleus(m, opt.tol);
  emit(opt, lin::nucleus_to_json(n));
  return 0;
}

int run_chu_reduce(const Options& opt) {
  auto in = open_input(opt.input);
  chu::ChuSpace x = chu::parse_chu_json(in);
  auto r = chu::se_reduce(x);
  int code = r.report.empty() ? 0 : 1;
  ojson out = ojson::parse(chu::reduction_to_json(x, r));
  out["report"] = report_json(r.report);
  out["status"] = r.report.empty() ? "ok" : "violations";
  emit(opt, out.dump(2) + "\n");
  return code;
}

fincat::Report check_bundle(const nucio::Bundle& b) {
  fincat::Report rep;
  for (const auto& [name, cat] : b.categories)
    for (auto& v : fincat::validate_category(*cat)) rep.push_back({"category(" + name + ")/" + v.law, v.location});
  if (!rep.empty()) return rep;
  if (b.adjunction)
    for (auto& v : nuc::check_adjunction(*b.adjunction)) rep.push_back({"adjunction/" + v.law, v.location});
  if (b.monad)
    for (auto& v : nuc::check_monad(*b.monad)) rep.push_back({"monad/" + v.law, v.location});
  return rep;
}

int run_cat(const std::string& action, const Options& opt) {
  auto in = open_input(opt.input);
  nucio::Bundle bundle = nucio::parse_bundle(in);
  ojson out;
  out["action"] = action;

  if (action == "check") {
    auto rep = check_bundle(bundle);
    if (bundle.adjunction && rep.empty()) {
      for (auto& v : nuc::check_hom_bijection(*bundle.adjunction))
        rep.push_back({"adjunction/" + v.law, v.location});
      nuc::Monad m = nuc::monad_of(*bundle.adjunction);
      for (auto& v : nuc::check_monad(m)) rep.push_back({"induced-monad/" + v.law, v.location});
      nuc::Comonad s = nuc::comonad_of(*bundle.adjunction);
      for (auto& v : nuc::check_comonad(s)) rep.push_back({"induced-comonad/" + v.law, v.location});
    }
    return finish_with_report(opt, out, rep);
  }

  if (action == "karoubi") {
    auto structural = check_bundle(bundle);
    if (!structural.empty()) {
      std::cerr << "bundle invalid:\n" << fincat::report_to_string(structural);
      return 2;
    }
    ojson cats = ojson::object();
    for (const auto& [name, cat] : bundle.categories) {
      auto [env, emb] = fincat::karoubi_envelope(cat);
      cats[name] = ojson::parse(nucio::category_to_json(*env));
    }
    out["envelopes"] = cats;
    return finish_with_report(opt, out, {});
  }

  if (action == "equiv") {
    auto structural = check_bundle(bundle);
    if (!structural.empty()) {
      std::cerr << "bundle invalid:\n" << fincat::report_to_string(structural);
      return 2;
    }
    std::string ln = opt.left_name, rn = opt.right_name;
    if (ln.empty() || rn.empty()) {
      if (bundle.categories.size() != 2) {
        std::cerr << "cat equiv: name two categories (--left/--right) or supply exactly two\n";
        return 2;
      }
      ln = bundle.categories[0].first;
      rn = bundle.categories[1].first;
    }
    auto res = fincat::equivalent(bundle.category(ln), bundle.category(rn), opt.search_cap);
    out["left"] = ln;
    out["right"] = rn;
    out["nodes_used"] = res.nodes_used;
    switch (res.verdict) {
      case fincat::EquivVerdict::Yes: {
        out["equivalent"] = true;
        ojson w = ojson::object();
        for (int x = 0; x < res.witness->source->n_obj(); ++x)
          w[res.witness->source->obj_name(x)] = res.witness->target->obj_name(res.witness->on_obj(x));
        out["witness_objects"] = w;
        emit(opt, out.dump(2) + "\n");
        return 0;
      }
      case fincat::EquivVerdict::No:
        out["equivalent"] = false;
        emit(opt, out.dump(2) + "\n");
        return 0;
      case fincat::EquivVerdict::Undecided:
        out["equivalent"] = "undecided";
        emit(opt, out.dump(2) + "\n");
        return 3;
    }
    return 2;
  }

  if (action == "street") {
    if (!bundle.monad) {
      std::cerr << "cat street: the bundle must contain a monad\n";
      return 2;
    }
    auto structural = check_bundle(bundle);
    if (!structural.empty()) {
      std::cerr << "bundle invalid:\n" << fincat::report_to_string(structural);
      return 2;
    }
    auto res = nuc::street_nucleus_monad(*bundle.monad, opt.karoubi);
    if (res.error) {
      std::cerr << "street nucleus: " << res.error->message << "\n";
      return 2;
    }
    out["carrier"] = ojson::parse(nucio::category_to_json(*res.monad->carrier));
    ojson endo = ojson::object();
    for (int x = 0; x < res.monad->carrier->n_obj(); ++x)
      endo[res.monad->carrier->obj_name(x)] = res.monad->carrier->obj_name(res.monad->endo.on_obj(x));
    out["endofunctor_objects"] = endo;
    return finish_with_report(opt, out, nuc::check_monad(*res.monad));
  }

  // the remaining actions need an adjunction
  if (!bundle.adjunction) {
    std::cerr << "cat " << action << ": the bundle must contain an adjunction\n";
    return 2;
  }
  auto structural = check_bundle(bundle);
  if (!structural.empty()) {
    std::cerr << "bundle invalid:\n" << fincat::report_to_string(structural);
    return 2;
  }
  const nuc::Adjunction& a = *bundle.adjunction;

  if (action == "nucleus") {
    auto res = nuc::nucleus(a, opt.karoubi);
    if (res.error) {
      std::cerr << "nucleus: " << res.error->message << " (run with --karoubi to complete the carriers)\n";
      return 2;
    }
    if (opt.format == "dot") {
      emit(opt, nucio::category_dot(*res.result->adjunction.A()));
      return res.result->report.empty() ? 0 : 1;
    }
    out["coalgebras"] = ojson::parse(nucio::category_to_json(*res.result->adjunction.A()));
    out["algebras"] = ojson::parse(nucio::category_to_json(*res.result->adjunction.B()));
    out["adjunction"] = ojson::parse(nucio::adjunction_to_json(res.result->adjunction, "coalgebras", "algebras"));
    auto nu = nuc::is_nuclear(res.result->adjunction);
    out["nuclear"] = nu.value;
    return finish_with_report(opt, out, res.result->report);
  }

  if (action == "simple") {
    auto sim = nuc::simple_nucleus(a);
    out["Ec"] = ojson::parse(nucio::category_to_json(*sim.Ec));
    out["Em"] = ojson::parse(nucio::category_to_json(*sim.Em));
    if (sim.adjunction)
      out["adjunction"] = ojson::parse(nucio::adjunction_to_json(*sim.adjunction, "Ec", "Em"));
    return finish_with_report(opt, out, sim.report);
  }

  if (action == "little") {
    auto lit = nuc::little_nucleus(a);
    out["Karc"] = ojson::parse(nucio::category_to_json(*lit.Karc));
    out["Karm"] = ojson::parse(nucio::category_to_json(*lit.Karm));
    if (lit.adjunction)
      out["adjunction"] = ojson::parse(nucio::adjunction_to_json(*lit.adjunction, "Karc", "Karm"));
    auto rep = lit.report;
    if (lit.adjunction) {
      auto sub = nuc::is_subnuclear(*lit.adjunction);
      out["subnuclear"] = sub.value;
    }
    return finish_with_report(opt, out, rep);
  }

  std::cerr << "unknown cat action: " << action << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nucleus: concept lattices, spectral nuclei, and the nucleus of an adjunction"};
  app.require_subcommand(1);

  Options opt;
  if (const char* cap = std::getenv("NUCLEUS_SEARCH_CAP")) opt.search_cap = std::atoll(cap);

  auto add_common = [&](CLI::App* sub, bool with_tol = false) {
    sub->add_option("input", opt.input, "input file")->required();
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--format", opt.format, "output format: json|dot")->check(CLI::IsMember({"json", "dot"}));
    if (with_tol) sub->add_option("--tol", opt.tol, "numerical tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  };

  auto* fca_cmd = app.add_subcommand("fca", "context (.cxt or .csv) -> concept lattice");
  add_common(fca_cmd);
  auto* dm_cmd = app.add_subcommand("dm", "poset (.json) -> Dedekind-MacNeille completion");
  add_common(dm_cmd);
  auto* svd_cmd = app.add_subcommand("svd", "matrix (.csv) -> spectral nucleus");
  add_common(svd_cmd, true);

  auto* chu_cmd = app.add_subcommand("chu", "Chu space operations");
  auto* chu_reduce = chu_cmd->add_subcommand("reduce", "separated-extensional reduction");
  add_common(chu_reduce);

  auto* cat_cmd = app.add_subcommand("cat", "category bundle operations");
  std::vector<CLI::App*> cat_subs;
  for (const char* name : {"check", "nucleus", "simple", "little", "karoubi", "equiv", "street"}) {
    auto* s = cat_cmd->add_subcommand(name, std::string("cat ") + name);
    add_common(s);
    s->add_flag("--karoubi", opt.karoubi, "auto-complete carriers by their Karoubi envelopes");
    s->add_option("--search-cap", opt.search_cap, "equivalence search node cap")->check(CLI::PositiveNumber);
    s->add_option("--left", opt.left_name, "left category name (cat equiv)");
    s->add_option("--right", opt.right_name, "right category name (cat equiv)");
    cat_subs.push_back(s);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (fca_cmd->parsed()) return run_fca(opt);
    if (dm_cmd->parsed()) return run_dm(opt);
    if (svd_cmd->parsed()) return run_svd(opt);
    if (chu_cmd->parsed()) {
      if (chu_reduce->parsed()) return run_chu_reduce(opt);
      std::cerr << "chu: expected a subcommand (reduce)\n";
      return 2;
    }
    if (cat_cmd->parsed()) {
      for (size_t i = 0; i < cat_subs.size(); ++i)
        if (cat_subs[i]->parsed())
          return run_cat(cat_subs[i]->get_name(), opt);
      std::cerr << "cat: expected a subcommand\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
