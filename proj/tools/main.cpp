// Command-line front door: algebra/diagram/coloring/move/Seifert utilities.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "mgrcol/algebra.hpp"
#include "mgrcol/coloring.hpp"
#include "mgrcol/family.hpp"
#include "mgrcol/moves.hpp"
#include "mgrcol/seifert.hpp"

using namespace mgrcol;
using json = nlohmann::json;

namespace {

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<std::pair<std::string, std::string>> results; // key, value
  unsigned long long seed = 0;
  bool use_json = false;

  void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
  void print() const {
    if (use_json) {
      json j;
      j["command"] = command;
      j["inputs"] = json::array();
      for (const auto& [p, h] : inputs) j["inputs"].push_back({{"path", p}, {"sha256", h}});
      j["results"] = json::array();
      for (const auto& [k, v] : results) j["results"].push_back({{k, v}});
      j["seed"] = seed;
      std::cout << j.dump() << "\n";
      return;
    }
    std::cout << "command: " << command << "\n";
    for (const auto& [p, h] : inputs) std::cout << "input: " << p << " sha256=" << h << "\n";
    for (const auto& [k, v] : results) std::cout << k << "=" << v << "\n";
    std::cout << "seed=" << seed << "\n";
  }
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string slurp(const std::string& path, Report& rep) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  std::string bytes = os.str();
  rep.inputs.emplace_back(path, sha256_hex(bytes));
  return bytes;
}

void spit(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

ColoringAlgebra view_of(const Algebra& a) {
  if (a.rack) return ColoringAlgebra::of(*a.rack);
  if (a.mgr) return ColoringAlgebra::of(*a.mgr);
  throw std::runtime_error("file holds a plain group table, not a rack or MGR");
}

Tangle base_by_name(const std::string& name) {
  if (name == "trivial") return trivial_base();
  if (name == "trefoil") return trefoil_tangle();
  if (name.starts_with("kinks:")) {
    auto rest = name.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::runtime_error("use kinks:<n>:<+|->");
    int n = std::stoi(rest.substr(0, colon));
    std::string sign = rest.substr(colon + 1);
    if (sign != "+" && sign != "-") throw std::runtime_error("kink sign must be + or -");
    return kink_chain(n, sign == "+");
  }
  throw std::runtime_error("unknown base '" + name + "' (trivial|trefoil|kinks:<n>:<s>)");
}

std::set<MoveKind> parse_kinds(const std::string& csv) {
  std::set<MoveKind> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.insert(move_kind_from_string(tok));
  if (out.empty()) throw std::runtime_error("empty move list");
  return out;
}

std::string report_axioms(const AxiomReport& rep, Report& out) {
  out.result("passed", rep.passed ? "true" : "false");
  int shown = 0;
  for (const auto& v : rep.violations) {
    std::ostringstream os;
    os << v.axiom << " at (";
    for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
    out.result("violation", os.str());
    if (++shown >= 5) break;
  }
  if (rep.violations.size() > 5)
    out.result("violations_total", std::to_string(rep.violations.size()));
  return rep.passed ? "pass" : "fail";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spatial-surface invariants: MGR coloring counts and Seifert minor gcds"};
  app.require_subcommand(1);
  unsigned long long seed = 0;
  int jobs = 1;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for all randomized operations");
  app.add_option("--jobs", jobs, "worker threads for solver and minor kernels");
  app.add_flag("--json", as_json, "machine-readable output");

  // algebra
  auto* alg = app.add_subcommand("algebra", "build and verify racks, quandles, MGRs");
  auto* mk = alg->add_subcommand("make", "construct an algebra and write a .alg file");
  std::vector<std::string> mk_args;
  std::string mk_out;
  mk->add_option("spec", mk_args, "dihedral n | cyclic n | product f1 f2 | mcq f | mgr f")
      ->expected(-1);
  mk->add_option("-o,--out", mk_out, "output .alg path")->required();
  auto* chk = alg->add_subcommand("check", "verify the axioms of a .alg file");
  std::string chk_file;
  chk->add_option("file", chk_file)->required();

  // color
  auto* col = app.add_subcommand("color", "count X-colorings of a diagram");
  std::string col_d, col_a, col_expect;
  long long col_enum = 0;
  bool col_oracle = false;
  col->add_option("diagram", col_d)->required();
  col->add_option("algebra", col_a)->required();
  col->add_option("--enumerate", col_enum, "list up to N colorings");
  col->add_flag("--oracle", col_oracle, "cross-check against brute force");
  col->add_option("--expect", col_expect, "fail unless the count equals this");

  // moves
  auto* mv = app.add_subcommand("moves", "apply Reidemeister moves");
  std::string mv_d, mv_apply, mv_out;
  std::vector<std::string> mv_walk;
  bool mv_surface = false;
  mv->add_option("diagram", mv_d)->required();
  mv->add_option("--walk", mv_walk, "<kinds-csv> <steps>: seeded random walk")
      ->expected(2);
  mv->add_option("--apply", mv_apply, "apply one serialized site");
  mv->add_flag("--surface", mv_surface, "restrict to spatial-surface moves R2,R3,R5,R6");
  mv->add_option("-o,--out", mv_out, "write the resulting diagram here");

  // seifert
  auto* sf = app.add_subcommand("seifert", "integer Seifert-matrix invariants");
  std::vector<std::string> sf_args;
  std::string sf_out;
  sf->add_option("spec", sf_args,
                 "profile f | family v k | distinguish f1 f2 | transform f p")
      ->expected(-1);
  sf->add_option("-o,--out", sf_out, "output matrix path");

  // family
  auto* fam = app.add_subcommand("family", "generate the distinguishing pair diagrams");
  auto* gen = fam->add_subcommand("gen", "generate Dn or Dnp");
  std::string gen_kind, gen_base = "trivial", gen_out;
  int gen_n = 0;
  gen->add_option("kind", gen_kind, "Dn | Dnp")->required();
  gen->add_option("--n", gen_n, "kink parameter n")->required();
  gen->add_option("--base", gen_base, "trivial | trefoil | kinks:<n>:<+|->");
  gen->add_option("-o,--out", gen_out, "output .sgd path")->required();
  auto* corp = fam->add_subcommand("corpus", "write all corpus diagrams");
  std::string corp_dir;
  corp->add_option("-o,--out", corp_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.seed = seed;
  rep.use_json = as_json;
  for (int i = 1; i < argc; ++i) rep.command += std::string(i > 1 ? " " : "") + argv[i];
  auto started = std::chrono::steady_clock::now();
  int exit_code = 0;

  try {
    if (mk->parsed()) {
      if (mk_args.empty()) throw std::runtime_error("missing make spec");
      const std::string& what = mk_args[0];
      std::string text;
      if (what == "dihedral" || what == "cyclic") {
        if (mk_args.size() != 2) throw std::runtime_error(what + " needs n");
        int n = std::stoi(mk_args[1]);
        text = serialize_algebra(what == "dihedral" ? dihedral_quandle(n) : cyclic_rack(n));
      } else if (what == "product") {
        if (mk_args.size() != 3) throw std::runtime_error("product needs two rack files");
        auto a1 = parse_algebra(slurp(mk_args[1], rep));
        auto a2 = parse_algebra(slurp(mk_args[2], rep));
        if (!a1.rack || !a2.rack) throw std::runtime_error("product inputs must be racks");
        text = serialize_algebra(product_rack(*a1.rack, *a2.rack));
      } else if (what == "mcq") {
        if (mk_args.size() != 2) throw std::runtime_error("mcq needs a group file");
        auto g = parse_algebra(slurp(mk_args[1], rep));
        if (!g.group) throw std::runtime_error("mcq input must be a 'group n' table");
        text = serialize_algebra(conjugation_mcq(*g.group));
      } else if (what == "mgr") {
        if (mk_args.size() != 2) throw std::runtime_error("mgr needs a rack file");
        auto r = parse_algebra(slurp(mk_args[1], rep));
        if (!r.rack) throw std::runtime_error("mgr input must be a rack");
        text = serialize_algebra(mgr_from_rack(*r.rack));
      } else {
        throw std::runtime_error("unknown make spec '" + what + "'");
      }
      spit(mk_out, text);
      rep.result("wrote", mk_out);
    } else if (chk->parsed()) {
      auto a = parse_algebra(slurp(chk_file, rep));
      std::string verdict;
      if (a.rack) {
        verdict = report_axioms(check_rack_axioms(*a.rack, jobs), rep);
        rep.result("quandle", check_quandle(*a.rack, jobs).passed ? "true" : "false");
      } else if (a.mgr) {
        verdict = report_axioms(check_mgr_axioms(*a.mgr, jobs), rep);
      } else {
        auto err = group_table_error(*a.group);
        verdict = err ? "fail" : "pass";
        rep.result("passed", err ? "false" : "true");
        if (err) rep.result("violation", *err);
      }
      if (verdict != "pass") exit_code = 1;
    } else if (col->parsed()) {
      auto d = parse_diagram(slurp(col_d, rep));
      auto a = parse_algebra(slurp(col_a, rep));
      auto x = view_of(a);
      BigInt count = count_colorings(d, x, jobs);
      rep.result("count", count.str());
      if (col_enum > 0) {
        auto res = enumerate_colorings(d, x, col_enum);
        for (const auto& c : res.colorings) {
          std::ostringstream os;
          for (auto it = c.assignment.begin(); it != c.assignment.end(); ++it)
            os << (it == c.assignment.begin() ? "" : " ") << it->first << ":" << it->second;
          rep.result("coloring", os.str());
        }
        rep.result("truncated", res.truncated ? "true" : "false");
      }
      if (col_oracle) {
        BigInt brute = count_colorings_bruteforce(d, x);
        rep.result("oracle", brute.str());
        rep.result("oracle_match", brute == count ? "true" : "false");
        if (brute != count) exit_code = 1;
      }
      if (!col_expect.empty()) {
        bool ok = BigInt(col_expect) == count;
        rep.result("expect_match", ok ? "true" : "false");
        if (!ok) exit_code = 1;
      }
    } else if (mv->parsed()) {
      auto d = parse_diagram(slurp(mv_d, rep));
      Diagram out;
      if (!mv_walk.empty()) {
        auto kinds = parse_kinds(mv_walk[0]);
        if (mv_surface)
          for (MoveKind k : kinds)
            if (!spatial_surface_moves().count(k))
              throw std::runtime_error("move " + to_string(k) +
                                       " is not a spatial-surface move");
        int steps = std::stoi(mv_walk[1]);
        auto walk = random_walk(d, kinds, steps, seed);
        out = walk.diagram;
        for (const auto& s : walk.log) rep.result("move", serialize_site(s));
        rep.result("steps", std::to_string(walk.log.size()));
      } else if (!mv_apply.empty()) {
        auto site = parse_site(mv_apply);
        if (mv_surface && !spatial_surface_moves().count(site.kind))
          throw std::runtime_error("move " + to_string(site.kind) +
                                   " is not a spatial-surface move");
        out = apply_move(d, site);
        rep.result("move", serialize_site(site));
      } else {
        throw std::runtime_error("moves needs --walk or --apply");
      }
      auto st = surface_stats(out);
      rep.result("arcs", std::to_string(out.arcs.size()));
      rep.result("crossings", std::to_string(out.crossings.size()));
      rep.result("surface", "components=" + std::to_string(st.components) +
                                " euler=" + std::to_string(st.euler) +
                                " boundary=" + std::to_string(st.boundary) +
                                " genus=" + std::to_string(st.genus));
      if (!mv_out.empty()) {
        spit(mv_out, serialize_diagram(out));
        rep.result("wrote", mv_out);
      }
    } else if (sf->parsed()) {
      if (sf_args.empty()) throw std::runtime_error("missing seifert spec");
      const std::string& what = sf_args[0];
      auto load = [&](const std::string& p) { return parse_matrix(slurp(p, rep)); };
      auto emit = [&](const IntMatrix& m) {
        if (!sf_out.empty()) {
          spit(sf_out, serialize_matrix(m));
          rep.result("wrote", sf_out);
        } else {
          std::ostringstream os;
          os << "\n" << serialize_matrix(m);
          rep.result("matrix", os.str());
        }
      };
      if (what == "profile") {
        if (sf_args.size() != 2) throw std::runtime_error("profile needs a matrix file");
        auto prof = gcd_profile(load(sf_args[1]), jobs);
        std::ostringstream os;
        for (size_t i = 0; i < prof.g.size(); ++i) os << (i ? " " : "") << prof.g[i];
        rep.result("profile", os.str());
      } else if (what == "family") {
        if (sf_args.size() != 3) throw std::runtime_error("family needs <v|empty> <k>");
        IntMatrix v = sf_args[1] == "empty" ? IntMatrix() : load(sf_args[1]);
        emit(build_vk(v, std::stoll(sf_args[2])));
      } else if (what == "distinguish") {
        if (sf_args.size() != 3) throw std::runtime_error("distinguish needs two matrices");
        bool diff = profiles_distinguish(load(sf_args[1]), load(sf_args[2]), jobs);
        rep.result("distinguish", diff ? "true" : "false");
      } else if (what == "transform") {
        if (sf_args.size() != 3) throw std::runtime_error("transform needs m and p");
        emit(congruent_transform(load(sf_args[1]), load(sf_args[2])));
      } else {
        throw std::runtime_error("unknown seifert spec '" + what + "'");
      }
    } else if (gen->parsed()) {
      Tangle base = base_by_name(gen_base);
      Diagram d;
      if (gen_kind == "Dn") d = make_dn(gen_n, base);
      else if (gen_kind == "Dnp") d = make_dn_prime(gen_n, base);
      else throw std::runtime_error("kind must be Dn or Dnp");
      spit(gen_out, serialize_diagram(d));
      rep.result("wrote", gen_out);
      rep.result("arcs", std::to_string(d.arcs.size()));
      rep.result("vertices", std::to_string(d.vertices.size()));
    } else if (corp->parsed()) {
      std::filesystem::create_directories(corp_dir);
      for (const auto& [name, d] : corpus()) {
        auto path = corp_dir + "/" + name + ".sgd";
        spit(path, serialize_diagram(d));
        rep.result("wrote", path);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  rep.print();
  std::cerr << "elapsed_ms=" << ms << "\n";
  return exit_code;
}
