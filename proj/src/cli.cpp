#include "dweb/cli.hpp"

#include "dweb/evaluate.hpp"
#include "dweb/global.hpp"
#include "dweb/oracle.hpp"
#include "dweb/skein.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace dweb {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load_input(const std::string &input) {
  if (input.rfind("builtin:", 0) == 0) return builtin(input.substr(8));
  std::ifstream f(input, std::ios::binary);
  if (!f) throw InputError("cannot read '" + input + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Json poly_json(const LaurentPoly &p) {
  Json a = Json::array();
  for (const auto &[half, c] : p.to_pairs()) {
    // Coefficients beyond 64 bits are emitted as decimal strings.
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      a.push_back({half, static_cast<std::int64_t>(c)});
    else
      a.push_back({half, c.str()});
  }
  return a;
}

Json envelope(const std::string &command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(std::ostream &out, const Json &j) { out << j.dump() << "\n"; }

Diagram load_diagram(const std::string &input) { return layout(parse(load_input(input))); }

Web load_web(const std::string &input) {
  Diagram d = load_diagram(input);
  if (!d.crossings.empty()) throw InputError("'" + input + "' has crossings; a web is required");
  return std::move(d.web);
}

// Relations whose id equals the request or belongs to the family "<request>_k".
std::vector<std::string> relations_matching(const std::string &id) {
  std::vector<std::string> r;
  for (const auto &x : relation_ids())
    if (x == id) return {x};
  for (const auto &x : relation_ids())
    if (x.rfind(id + "_", 0) == 0) r.push_back(x);
  if (r.empty()) throw UnknownRelation("unknown relation '" + id + "'");
  return r;
}

std::vector<int> parse_n_list(const std::string &s) {
  std::vector<int> ns;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(tok, &pos);
    } catch (const std::exception &) {
      throw CLI::ValidationError("--n", "expected a comma-separated list of integers, got '" + s + "'");
    }
    if (pos != tok.size() || n < 1) throw CLI::ValidationError("--n", "invalid value '" + tok + "'");
    ns.push_back(n);
  }
  if (ns.empty()) throw CLI::ValidationError("--n", "empty list");
  return ns;
}

int report_identity(std::ostream &out, bool json, const std::string &command, const std::string &input,
                    const IdentityReport &rep) {
  if (json) {
    Json j = envelope(command);
    j["input"] = input;
    j["N"] = rep.N;
    j["equal"] = rep.equal;
    j["terms"] = rep.terms;
    j["lhs"] = poly_json(rep.lhs);
    j["rhs"] = poly_json(rep.rhs);
    emit(out, j);
  } else {
    out << (rep.equal ? "equal" : "unequal") << "\n";
    out << "lhs: " << rep.lhs.to_string() << "\n";
    out << "rhs: " << rep.rhs.to_string() << "\n";
  }
  return rep.equal ? kExitOk : kExitUnequal;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Evaluation of so(2N) webs and link diagrams", "dweb"};
  app.require_subcommand(1);
  const int cores = std::max(1U, std::thread::hardware_concurrency());
  int threads = cores;
  app.add_option("--threads", threads, "Worker threads (default: available cores)")->check(CLI::PositiveNumber);

  std::string input;
  int N = 3;
  bool json = false;
  auto with_input = [&](CLI::App *sub) {
    sub->add_option("input", input, "File path or builtin:<name>")->required();
    sub->add_option("--n", N, "Rank N")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--json", json, "Machine-readable output");
  };

  auto *eval_cmd = app.add_subcommand("eval", "Evaluate a web or diagram");
  with_input(eval_cmd);
  auto *color_cmd = app.add_subcommand("colorings", "Count colorings and their degrees");
  with_input(color_cmd);
  auto *link_cmd = app.add_subcommand("link", "Link invariant of a vectorial link diagram");
  with_input(link_cmd);
  auto *branch_cmd = app.add_subcommand("branching-check", "Check the branching rule from N to N-1");
  with_input(branch_cmd);
  auto *typea_cmd = app.add_subcommand("typea-check", "Check the decomposition into MOY evaluations");
  with_input(typea_cmd);
  auto *oracle_cmd = app.add_subcommand("oracle-compare", "Compare against an independent evaluation path");
  with_input(oracle_cmd);

  auto *verify_cmd = app.add_subcommand("verify", "Verify local relations");
  bool all = false;
  std::string id;
  std::string n_list = "3";
  auto *all_opt = verify_cmd->add_flag("--all", all, "All relations");
  auto *id_opt = verify_cmd->add_option("--id", id, "Relation id or family");
  all_opt->excludes(id_opt);
  verify_cmd->add_option("--n", n_list, "Comma-separated ranks")->required();
  verify_cmd->add_flag("--json", json, "Machine-readable output");

  auto *catalog_cmd = app.add_subcommand("catalog", "List builtins and relations");
  catalog_cmd->add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  set_default_threads(threads);
  EvalOptions opts;
  opts.threads = threads;

  try {
    if (*eval_cmd) {
      const Diagram d = load_diagram(input);
      const LaurentPoly p = d.crossings.empty() ? evaluate_poly(d.web, N, opts) : evaluate_diagram(d, N, opts);
      if (json) {
        Json j = envelope("eval");
        j["input"] = input;
        j["N"] = N;
        j["poly"] = poly_json(p);
        j["text"] = p.to_string();
        emit(out, j);
      } else {
        out << p.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*color_cmd) {
      const Evaluation ev = evaluate(load_web(input), N, opts);
      if (json) {
        Json j = envelope("colorings");
        j["input"] = input;
        j["N"] = N;
        j["count"] = ev.coloring_count;
        Json h = Json::array();
        for (const auto &[deg, n] : ev.histogram) h.push_back({deg, n});
        j["degrees"] = h;
        emit(out, j);
      } else {
        out << "colorings: " << ev.coloring_count << "\n";
        for (const auto &[deg, n] : ev.histogram) out << "degree " << deg << ": " << n << "\n";
      }
      return kExitOk;
    }
    if (*link_cmd) {
      const Diagram d = load_diagram(input);
      require_link_diagram(d);
      const LaurentPoly p = evaluate_diagram(d, N, opts);
      if (json) {
        Json j = envelope("link");
        j["input"] = input;
        j["N"] = N;
        j["poly"] = poly_json(p);
        j["text"] = p.to_string();
        emit(out, j);
      } else {
        out << p.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*branch_cmd) {
      if (N < 2) throw CLI::ValidationError("--n", "branching-check needs N >= 2");
      return report_identity(out, json, "branching-check", input, branching_check(load_web(input), N, opts));
    }
    if (*typea_cmd) return report_identity(out, json, "typea-check", input, typeA_check(load_web(input), N, opts));
    if (*oracle_cmd) {
      const Diagram d = load_diagram(input);
      IdentityReport rep;
      rep.N = N;
      std::string method;
      if (!d.crossings.empty()) {
        require_link_diagram(d);
        method = "kauffman-skein";
        rep.lhs = evaluate_diagram(d, N, opts);
        rep.rhs = kauffman_specialized(d, N);
      } else {
        if (N < 3) throw CLI::ValidationError("--n", "square replacement needs N >= 3");
        method = "square-replacement";
        rep.lhs = evaluate_poly(d.web, N, opts);
        rep.rhs = square_replacement_eval(d.web, N);
      }
      rep.equal = rep.lhs == rep.rhs;
      if (json) {
        Json j = envelope("oracle-compare");
        j["input"] = input;
        j["N"] = N;
        j["method"] = method;
        j["equal"] = rep.equal;
        j["lhs"] = poly_json(rep.lhs);
        j["rhs"] = poly_json(rep.rhs);
        emit(out, j);
      } else {
        out << method << ": " << (rep.equal ? "equal" : "unequal") << "\n";
        out << "evaluate: " << rep.lhs.to_string() << "\n";
        out << "oracle:   " << rep.rhs.to_string() << "\n";
      }
      return rep.equal ? kExitOk : kExitUnequal;
    }
    if (*verify_cmd) {
      if (!all && id.empty()) throw CLI::ValidationError("verify", "one of --all or --id is required");
      const auto ns = parse_n_list(n_list);
      const auto ids = all ? relation_ids() : relations_matching(id);
      bool ok = true;
      Json results = Json::array();
      for (const auto &rid : ids)
        for (int n : ns) {
          const auto rep = verify_relation(rid, n, opts);
          ok = ok && rep.equal;
          if (json) {
            results.push_back({{"id", rid}, {"N", n}, {"equal", rep.equal}, {"lhs", poly_json(rep.lhs)}, {"rhs", poly_json(rep.rhs)}});
          } else {
            out << rid << " N=" << n << ": " << (rep.equal ? "equal" : "unequal") << "\n";
            if (!rep.equal) out << "  lhs: " << rep.lhs.to_string() << "\n  rhs: " << rep.rhs.to_string() << "\n";
          }
        }
      if (json) {
        Json j = envelope("verify");
        j["equal"] = ok;
        j["results"] = results;
        emit(out, j);
      }
      return ok ? kExitOk : kExitUnequal;
    }
    if (*catalog_cmd) {
      if (json) {
        Json j = envelope("catalog");
        j["builtins"] = builtin_names();
        Json rel = Json::array();
        for (const auto &r : relation_catalog()) rel.push_back({{"id", r.id}, {"description", r.description}});
        j["relations"] = rel;
        emit(out, j);
      } else {
        out << "builtins:\n";
        for (const auto &n : builtin_names()) out << "  " << n << "\n";
        out << "relations:\n";
        for (const auto &r : relation_catalog()) out << "  " << r.id << "  " << r.description << "\n";
      }
      return kExitOk;
    }
  } catch (const DslError &e) {
    err << input << ": error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dweb
