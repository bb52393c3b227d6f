// latcon: command-line front end for the lattice congruence toolkit.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latcon/autgroup.hpp"
#include "latcon/congruence.hpp"
#include "latcon/construct.hpp"
#include "latcon/ideal_filter.hpp"
#include "latcon/identity.hpp"
#include "latcon/io.hpp"
#include "latcon/subspace.hpp"
#include "latcon/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace latcon;

struct Common {
  std::size_t limit = kDefaultMaxSize;
  bool json_out = false;
  bool lenient = false;
  std::string dot_file;
};

BuildOptions build_options(const Common& c) {
  BuildOptions o;
  o.max_size = c.limit;
  o.strict = !c.lenient;
  o.on_warning = [](const std::string& w) { std::cerr << "warning: " << w << "\n"; };
  return o;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// A lattice argument is a JSON file, a stock name ("m3", "chain:4",
// "sub:2:3", ...), or "-"/empty for JSON on stdin.
FiniteLattice resolve(const std::string& spec, const Common& c) {
  if (spec.empty() || spec == "-") return parse_lattice_json(read_all(std::cin), build_options(c));
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    return parse_lattice_json(read_all(in), build_options(c));
  }
  if (spec.rfind("sub:", 0) == 0) {
    unsigned p = 0;
    std::size_t n = 0;
    char sep = 0;
    std::istringstream s(spec.substr(4));
    if (!(s >> p >> sep >> n) || sep != ':' || !s.eof())
      throw Error(Errc::InvalidParameter, "expected sub:P:N, got '" + spec + "'");
    return sub_lattice(p, n, c.limit).lattice;
  }
  return stock(spec);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidParameter, "cannot write '" + path + "'");
  out << text;
}

// Emits a constructed lattice: JSON on stdout (so it can be piped), DOT to a file on request.
void emit_lattice(const FiniteLattice& l, const Common& c) {
  std::cout << lattice_to_json(l, c.json_out ? 2 : -1) << "\n";
  if (!c.dot_file.empty()) write_file(c.dot_file, lattice_to_dot(l));
}

std::string join_labels(const FiniteLattice& l, const std::vector<Elem>& xs) {
  std::string s;
  for (Elem x : xs) s += (s.empty() ? "" : " ") + l.label(x);
  return s;
}

void cmd_show(const FiniteLattice& l, const Common& c) {
  if (c.json_out) {
    json j = json::parse(lattice_to_json(l));
    j["size"] = l.size();
    j["length"] = l.length();
    j["bottom"] = l.label(l.bottom());
    j["top"] = l.label(l.top());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "elements: " << l.size() << "\nbottom: " << l.label(l.bottom()) << "\ntop: " << l.label(l.top())
              << "\nlength: " << l.length() << "\natoms: " << join_labels(l, l.atoms())
              << "\ncoatoms: " << join_labels(l, l.coatoms()) << "\ncovers:";
    for (auto [a, b] : l.cover_pairs()) std::cout << " " << l.label(a) << "<" << l.label(b);
    std::cout << "\n";
  }
  if (!c.dot_file.empty()) write_file(c.dot_file, lattice_to_dot(l));
}

void cmd_con(const FiniteLattice& l, const Common& c, bool blocks) {
  const auto con = all_congruences(l);
  if (c.json_out) {
    json j;
    j["count"] = con.size();
    j["congruences"] = json::array();
    for (const auto& t : con.congruences) j["congruences"].push_back(t.to_string(l));
    j["order"] = json::parse(lattice_to_json(con.lattice));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "|Con| = " << con.size() << "\n";
    if (blocks)
      for (std::size_t i = 0; i < con.size(); ++i) std::cout << "  " << con.congruences[i].to_string(l) << "\n";
  }
  if (!c.dot_file.empty()) write_file(c.dot_file, lattice_to_dot(con.lattice, "Con"));
}

void cmd_princ(const FiniteLattice& l, const Common& c) {
  const auto pp = princ_poset(l);
  if (c.json_out) {
    json j;
    j["count"] = pp.congruences.size();
    for (std::size_t i = 0; i < pp.congruences.size(); ++i)
      j["congruences"].push_back({{"blocks", pp.congruences[i].to_string(l)},
                                  {"generator", {l.label(pp.generators[i].first), l.label(pp.generators[i].second)}}});
    for (auto [a, b] : pp.order.cover_pairs()) j["covers"].push_back({a, b});
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "|Princ| = " << pp.congruences.size() << (pp.order.is_chain() ? " (chain)" : "") << "\n";
  for (std::size_t i = 0; i < pp.congruences.size(); ++i)
    std::cout << "  [" << i << "] cg(" << l.label(pp.generators[i].first) << "," << l.label(pp.generators[i].second)
              << ") = " << pp.congruences[i].to_string(l) << "\n";
  std::cout << "covers:";
  for (auto [a, b] : pp.order.cover_pairs()) std::cout << " " << a << "<" << b;
  std::cout << "\n";
}

void cmd_cfi(const FiniteLattice& l, const Common& c) {
  const auto p = cfi_profile(l);
  if (c.json_out)
    std::cout << json{{"con", p.con_count}, {"filt", p.filt_count}, {"id", p.id_count}}.dump() << "\n";
  else
    std::cout << "<" << p.con_count << ", " << p.filt_count << ", " << p.id_count << ">\n";
}

void cmd_aut(const FiniteLattice& l, const Common& c) {
  const auto g = automorphisms(l, c.limit);
  if (c.json_out) {
    json j{{"order", g.order}, {"generators", json::array()}};
    for (const auto& p : g.generators) j["generators"].push_back(cycle_notation(l, p));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "|Aut| = " << g.order << "\n";
  for (const auto& p : g.generators) std::cout << "  " << cycle_notation(l, p) << "\n";
}

void cmd_sets(const FiniteLattice& l, const Common& c, SetKind kind, bool count_only) {
  const auto sets = kind == SetKind::Ideal ? ideals(l) : filters(l);
  if (c.json_out) {
    json j{{"count", sets.size()}, {"members", json::array()}};
    if (!count_only)
      for (const auto& s : sets) j["members"].push_back(to_string(l, s));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << sets.size() << (kind == SetKind::Ideal ? " ideals" : " filters") << ", all principal\n";
  if (!count_only)
    for (const auto& s : sets) std::cout << "  " << l.label(*s.generator) << ": " << to_string(l, s) << "\n";
}

void cmd_identity(const FiniteLattice& l, const Common& c, const std::string& text, bool dual_too) {
  const auto id = parse_identity(text);
  const auto r = holds_in(l, id);
  json j{{"identity", id.to_string()}, {"holds", r.holds}, {"assignments", r.assignments_checked}};
  if (r.counterexample) {
    json ce;
    for (std::size_t i = 0; i < r.counterexample->size(); ++i) ce[id.var_names[i]] = l.label((*r.counterexample)[i]);
    j["counterexample"] = ce;
  }
  if (dual_too) j["dual_holds_in_dual"] = holds_in(dual(l), id.dual()).holds;
  if (c.json_out) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << id.to_string() << ": " << (r.holds ? "holds" : "fails") << "\n";
  if (r.counterexample) {
    std::cout << "counterexample:";
    for (std::size_t i = 0; i < r.counterexample->size(); ++i)
      std::cout << " " << id.var_names[i] << "=" << l.label((*r.counterexample)[i]);
    std::cout << "\n";
  }
}

int cmd_paper_check(std::uint64_t seed, const std::vector<int>& only, const Common& c) {
  std::vector<verify::CriterionResult> results;
  if (only.empty())
    results = verify::run_all(seed);
  else
    for (int id : only) results.push_back(verify::run_criterion(id, seed));
  int failed = 0;
  json j = json::array();
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    if (c.json_out) {
      j.push_back({{"id", r.id},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"limit_seconds", r.limit_seconds},
                   {"detail", r.detail}});
      continue;
    }
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  (" << r.seconds << "s)  "
              << r.detail << "\n";
  }
  if (c.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << results.size() - failed << " of " << results.size() << " checks passed (seed " << seed << ")\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattice congruence toolkit"};
  app.require_subcommand(1);
  Common c;
  std::string lattice_arg;

  auto add_common = [&](CLI::App* sub, bool with_lattice = true) {
    if (with_lattice) sub->add_option("--lattice,-l", lattice_arg, "JSON file, stock name, or - for stdin");
    sub->add_flag("--json", c.json_out, "Machine-readable output");
    sub->add_option("--limit", c.limit, "Maximum lattice size")->check(CLI::PositiveNumber);
    sub->add_flag("--lenient", c.lenient, "Drop redundant covers with a warning instead of failing");
  };

  auto* build = app.add_subcommand("build", "Validate a lattice and print it in normalized JSON");
  add_common(build);
  build->add_option("--dot", c.dot_file, "Also write DOT to this file");

  auto* show = app.add_subcommand("show", "Summarize a lattice");
  add_common(show);
  show->add_option("--dot", c.dot_file, "Also write DOT to this file");

  bool blocks = false;
  auto* con = app.add_subcommand("con", "Congruence lattice");
  add_common(con);
  con->add_flag("--blocks", blocks, "List the blocks of every congruence");
  con->add_option("--dot", c.dot_file, "Write the Hasse diagram of Con(L) as DOT");

  auto* princ = app.add_subcommand("princ", "Ordered set of principal congruences");
  add_common(princ);
  auto* cfi = app.add_subcommand("cfi", "Congruence, filter and ideal counts");
  add_common(cfi);
  auto* aut = app.add_subcommand("aut", "Automorphism group");
  add_common(aut);

  bool count_only = false;
  auto* ideals_cmd = app.add_subcommand("ideals", "List ideals");
  add_common(ideals_cmd);
  ideals_cmd->add_flag("--count", count_only, "Only print the count");
  auto* filters_cmd = app.add_subcommand("filters", "List filters");
  add_common(filters_cmd);
  filters_cmd->add_flag("--count", count_only, "Only print the count");

  std::string identity_text;
  bool with_dual = false;
  auto* ident = app.add_subcommand("check-identity", "Check a lattice identity, e.g. '(= (meet x y) (meet y x))'");
  add_common(ident);
  ident->add_option("identity", identity_text, "Identity in prefix syntax")->required();
  ident->add_flag("--dual", with_dual, "Also check the dual identity in the dual lattice");

  auto* construct = app.add_subcommand("construct", "Build a lattice; prints JSON on stdout");
  construct->require_subcommand(1);
  std::string seed_arg = "m3", upper_arg, h_arg;
  std::vector<std::string> with_args;
  std::size_t stages = 0, m = 0, n = 0, dim = 2, height = 1;
  unsigned p = 2;
  auto add_construct = [&](const char* name, const char* help) {
    auto* sub = construct->add_subcommand(name, help);
    add_common(sub, false);
    sub->add_option("--dot", c.dot_file, "Also write DOT to this file");
    return sub;
  };
  auto* c_w = add_construct("w-gadget", "New bounds and two atom-coatoms around a lattice");
  c_w->add_option("--seed-lattice,--seed", seed_arg, "Lattice to extend");
  auto* c_tower = add_construct("tower", "Iterated W-gadget");
  c_tower->add_option("--seed-lattice,--seed", seed_arg, "Stage 0 lattice");
  c_tower->add_option("--stages", stages, "Number of W-gadget steps");
  auto* c_glue = add_construct("glued-sum", "Identify the top of one lattice with the bottom of another");
  c_glue->add_option("--lattice,-l", lattice_arg, "Lower summand")->required();
  c_glue->add_option("--upper", upper_arg, "Upper summand")->required();
  auto* c_cap = add_construct("m3-cap", "M3-cap of a base lattice and H");
  c_cap->add_option("--lattice,-l", lattice_arg, "Base lattice (at least 3 elements)")->required();
  c_cap->add_option("--base", h_arg, "Lattice H spliced below v")->required();
  auto* c_freese = add_construct("freese-composite", "Glued sum with 2^m * 3^n congruences");
  c_freese->add_option("--p", p, "Prime");
  c_freese->add_option("--dim", dim, "Subspace lattice dimension");
  c_freese->add_option("--m", m, "Exponent of 2");
  c_freese->add_option("--n", n, "Exponent of 3");
  auto* c_prod = add_construct("product-chains", "Product of n chains of height h");
  c_prod->add_option("--n", n, "Number of factors")->required();
  c_prod->add_option("--height", height, "Height of each chain");
  auto* c_repl = add_construct("replace-atoms", "Replace prime intervals [0,a] by lattices");
  c_repl->add_option("--lattice,-l", lattice_arg, "Lattice whose atoms are replaced")->required();
  c_repl->add_option("--with", with_args, "Replacement lattices, assigned to atoms in id order")->required();

  std::uint64_t rand_seed = verify::kDefaultSeed;
  std::vector<int> only;
  auto* check = app.add_subcommand("paper-check", "Run the acceptance suite");
  check->add_flag("--json", c.json_out, "Machine-readable output");
  check->add_option("--rand-seed", rand_seed, "Seed for the random corpus");
  check->add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, verify::kCriterionCount));

  std::string json_file;
  auto* exp = app.add_subcommand("export", "Write a lattice as JSON and/or DOT");
  exp->add_option("--lattice,-l", lattice_arg, "JSON file, stock name, or - for stdin");
  exp->add_option("--limit", c.limit, "Maximum lattice size")->check(CLI::PositiveNumber);
  exp->add_option("--json", json_file, "JSON output file");
  exp->add_option("--dot", c.dot_file, "DOT output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto lattice = [&] { return resolve(lattice_arg, c); };
    if (*build) {
      const auto l = lattice();
      std::cout << lattice_to_json(l, c.json_out ? 2 : -1) << "\n";
      if (!c.dot_file.empty()) write_file(c.dot_file, lattice_to_dot(l));
    } else if (*show) {
      cmd_show(lattice(), c);
    } else if (*con) {
      cmd_con(lattice(), c, blocks);
    } else if (*princ) {
      cmd_princ(lattice(), c);
    } else if (*cfi) {
      cmd_cfi(lattice(), c);
    } else if (*aut) {
      cmd_aut(lattice(), c);
    } else if (*ideals_cmd) {
      cmd_sets(lattice(), c, SetKind::Ideal, count_only);
    } else if (*filters_cmd) {
      cmd_sets(lattice(), c, SetKind::Filter, count_only);
    } else if (*ident) {
      cmd_identity(lattice(), c, identity_text, with_dual);
    } else if (*construct) {
      if (*c_w) {
        emit_lattice(w_gadget(resolve(seed_arg, c)), c);
      } else if (*c_tower) {
        TowerOptions o;
        o.max_size = c.limit;
        o.on_warning = [](const std::string& w) { std::cerr << "warning: " << w << "\n"; };
        emit_lattice(tower(resolve(seed_arg, c), stages, o).lattice, c);
      } else if (*c_glue) {
        emit_lattice(glued_sum(resolve(lattice_arg, c), resolve(upper_arg, c)), c);
      } else if (*c_cap) {
        emit_lattice(m3_cap(resolve(lattice_arg, c), resolve(h_arg, c)).lattice, c);
      } else if (*c_freese) {
        emit_lattice(freese_composite(p, dim, m, n), c);
      } else if (*c_prod) {
        emit_lattice(product_of_chains(n, height, c.limit), c);
      } else if (*c_repl) {
        const auto l = resolve(lattice_arg, c);
        const auto atoms = l.atoms();
        if (with_args.size() > atoms.size())
          throw Error(Errc::InvalidParameter, std::to_string(with_args.size()) + " replacements for " +
                                                  std::to_string(atoms.size()) + " atoms");
        std::map<Elem, FiniteLattice> repl;
        for (std::size_t i = 0; i < with_args.size(); ++i) repl.emplace(atoms[i], resolve(with_args[i], c));
        emit_lattice(replace_atom_intervals(l, repl), c);
      }
    } else if (*check) {
      return cmd_paper_check(rand_seed, only, c);
    } else if (*exp) {
      const auto l = lattice();
      if (json_file.empty() && c.dot_file.empty()) std::cout << lattice_to_json(l, 2) << "\n";
      if (!json_file.empty()) write_file(json_file, lattice_to_json(l, 2) + "\n");
      if (!c.dot_file.empty()) write_file(c.dot_file, lattice_to_dot(l));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
