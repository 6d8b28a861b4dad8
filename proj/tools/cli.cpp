#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hoffgraph/association.hpp"
#include "hoffgraph/bounds.hpp"
#include "hoffgraph/errors.hpp"
#include "hoffgraph/graph_io.hpp"
#include "hoffgraph/hoffman.hpp"
#include "hoffgraph/search.hpp"
#include "hoffgraph/spectra.hpp"
#include "hoffgraph/verify.hpp"

namespace hoffgraph::cli {

namespace {

using json = nlohmann::json;

struct usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  std::string format = "edges";
  unsigned threads = 0;
};

std::string slurp(Context& ctx, const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw usage("cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

Graph load_graph(Context& ctx, const std::string& path, const std::string& input_format) {
  const auto text = slurp(ctx, path);
  try {
    if (input_format.empty()) return parse_graph(text);
    return parse_graph(text, parse_graph_format(input_format));
  } catch (const std::exception& e) {
    throw usage("malformed graph in " + path + ": " + e.what());
  }
}

HoffmanGraph load_hoffman(Context& ctx, const std::string& path) {
  try {
    return hoffman_from_json(json::parse(slurp(ctx, path)));
  } catch (const usage&) {
    throw;
  } catch (const std::exception& e) {
    throw usage("malformed Hoffman graph in " + path + ": " + e.what());
  }
}

Rational parse_lambda(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw usage("bad lambda '" + text + "': " + e.what());
  }
}

void emit_graph(Context& ctx, const Graph& g, const json& extra = nullptr) {
  if (ctx.as_json) {
    json j = {{"graph", to_json(g)}};
    if (!extra.is_null()) j.update(extra);
    ctx.out << j.dump(2) << "\n";
    return;
  }
  ctx.out << format_graph(g, parse_graph_format(ctx.format));
  if (!extra.is_null()) ctx.err << extra.dump(2) << "\n";
}

void print_spectrum(std::ostream& out, const Spectrum& s) {
  out << std::setprecision(12);
  for (const auto& e : s.entries) out << e.value << "^" << e.multiplicity << "\n";
}

void print_matrix(std::ostream& out, const SymMatrix& m) {
  out << std::setprecision(12);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << "\n";
  }
}

std::vector<std::size_t> parse_parts(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      parts.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw usage("bad part size '" + item + "'");
    }
  }
  return parts;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Hoffman-graph spectral toolkit"};
  app.name("hoffgraph");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.as_json, "Machine-readable JSON output");
  app.add_option("--format", ctx.format, "Graph output format: edges, json or graph6")->check(CLI::IsMember({"edges", "json", "graph6", "g6"}));
  app.add_option("--threads", ctx.threads, "Worker threads (default: HOFFGRAPH_THREADS or hardware)");

  std::string graph_path, input_format;
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("graph", graph_path, "Graph file, or - for stdin");
    if (required) opt->required();
    sub->add_option("--input-format", input_format, "edges, json or graph6 (sniffed by default)");
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum of a graph");
  add_input(spectrum_cmd, true);

  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph");
  std::string construct_name, parts_text, lambda_text = "1";
  std::size_t m_param = 1, q_param = 1;
  std::int64_t a_param = 2;
  construct_cmd->add_option("name", construct_name)
      ->required()
      ->check(CLI::IsMember({"complete-multipartite", "line-graph", "complement", "k-tilde", "coclique-ext", "lower-bound-graph"}));
  construct_cmd->add_option("--parts", parts_text, "Comma-separated part sizes");
  construct_cmd->add_option("--input", graph_path, "Input graph file for line-graph, complement, coclique-ext");
  construct_cmd->add_option("--input-format", input_format);
  construct_cmd->add_option("--m", m_param);
  construct_cmd->add_option("--q", q_param);
  construct_cmd->add_option("--a", a_param);
  construct_cmd->add_option("--lambda", lambda_text);

  auto* hoffman_cmd = app.add_subcommand("hoffman", "Hoffman-graph operations on a JSON file");
  std::string hoffman_action, hoffman_path;
  std::size_t p_param = 0;
  hoffman_cmd->add_option("action", hoffman_action)->required()->check(CLI::IsMember({"special-matrix", "lambda-min", "fatten"}));
  hoffman_cmd->add_option("file", hoffman_path, "Hoffman graph JSON {order, edges, fat}")->required();
  hoffman_cmd->add_option("--p", p_param, "Clique size for fatten");

  auto* associate_cmd = app.add_subcommand("associate", "Associated Hoffman graph of a graph");
  std::size_t assoc_m = 2, assoc_n = 9;
  bool certified = false;
  add_input(associate_cmd, true);
  associate_cmd->add_option("--m", assoc_m)->required();
  associate_cmd->add_option("--n", assoc_n)->required();
  associate_cmd->add_flag("--certified", certified, "Check every class representative");

  auto* bounds_cmd = app.add_subcommand("bounds", "Thresholds and known bounds");
  std::string bounds_action;
  std::int64_t k_param = 1;
  std::size_t s_param = 3, t_param = 3;
  bool brute_force = false;
  bounds_cmd->add_option("action", bounds_action)->required()->check(CLI::IsMember({"thresholds", "known-v", "mu-bound", "ramsey"}));
  bounds_cmd->add_option("--lambda", lambda_text);
  bounds_cmd->add_option("--k", k_param);
  bounds_cmd->add_option("--s", s_param);
  bounds_cmd->add_option("--t", t_param);
  bounds_cmd->add_flag("--brute-force", brute_force, "Recompute R(s,t) exhaustively");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive computation of v(k, lambda)");
  std::size_t search_k = 2, n_max = 8;
  std::string search_lambda;
  bool no_prune = false;
  SearchOptions sopts;
  search_cmd->add_option("--k", search_k)->required();
  search_cmd->add_option("--lambda", search_lambda)->required();
  search_cmd->add_option("--n-max", n_max)->required();
  search_cmd->add_flag("--no-prune", no_prune, "Disable the interlacing cut");
  search_cmd->add_option("--degree-cap", sopts.degree_cap);
  search_cmd->add_option("--order-cap", sopts.order_cap);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "spectra", "hoffman", "association", "bounds", "search"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  if (ctx.format == "g6") ctx.format = "graph6";
  if (ctx.as_json && app.count("--format")) {
    err << "error: --json and --format are mutually exclusive\n";
    return usage_error;
  }

  try {
    if (*spectrum_cmd) {
      const auto g = load_graph(ctx, graph_path, input_format);
      const auto s = spectrum(g);
      if (ctx.as_json) out << to_json(s).dump(2) << "\n";
      else print_spectrum(out, s);
      return success;
    }

    if (*construct_cmd) {
      auto need_input = [&]() {
        if (graph_path.empty()) throw usage(construct_name + " needs --input");
        return load_graph(ctx, graph_path, input_format);
      };
      if (construct_name == "complete-multipartite") {
        if (parts_text.empty()) throw usage("complete-multipartite needs --parts");
        emit_graph(ctx, complete_multipartite(parse_parts(parts_text)));
      } else if (construct_name == "line-graph") {
        emit_graph(ctx, line_graph(need_input()));
      } else if (construct_name == "complement") {
        emit_graph(ctx, complement(need_input()));
      } else if (construct_name == "k-tilde") {
        emit_graph(ctx, k_tilde(m_param));
      } else if (construct_name == "coclique-ext") {
        emit_graph(ctx, coclique_extension(need_input(), q_param));
      } else {
        const auto lambda = parse_lambda(lambda_text);
        if (!lambda.is_integer()) throw usage("lower-bound-graph needs an integer lambda");
        const auto w = lower_bound_graph(lambda.num(), a_param);
        emit_graph(ctx, w.graph, {{"certificate", to_json(w.certificate)}});
        return w.certificate.verified ? success : verification_failed;
      }
      return success;
    }

    if (*hoffman_cmd) {
      const auto h = load_hoffman(ctx, hoffman_path);
      if (hoffman_action == "special-matrix") {
        const auto s = special_matrix(h);
        if (ctx.as_json) {
          json rows = json::array();
          for (Eigen::Index i = 0; i < s.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < s.cols(); ++j) row.push_back(s(i, j));
            rows.push_back(row);
          }
          out << json{{"special_matrix", rows}, {"slim", h.slim_vertices()}}.dump(2) << "\n";
        } else {
          print_matrix(out, s);
        }
      } else if (hoffman_action == "lambda-min") {
        const double v = lambda_min_hoffman(h);
        if (ctx.as_json) out << json{{"lambda_min", v}}.dump(2) << "\n";
        else out << std::setprecision(12) << v << "\n";
      } else {
        if (p_param == 0) throw usage("fatten needs --p >= 1");
        emit_graph(ctx, fatten(h, p_param));
      }
      return success;
    }

    if (*associate_cmd) {
      const auto g = load_graph(ctx, graph_path, input_format);
      PartitionOptions popts;
      popts.certified = certified;
      const auto a = associate_detailed(g, assoc_m, assoc_n, popts);
      if (ctx.as_json) {
        out << json{{"hoffman", to_json(a.hoffman)}, {"partition", to_json(a.partition)}}.dump(2) << "\n";
      } else {
        out << "cliques: " << a.partition.family.cliques.size() << "\nclasses: " << a.partition.classes.size() << "\n";
        for (std::size_t i = 0; i < a.partition.quasi_cliques.size(); ++i) {
          out << "fat " << g.order() + i << ":";
          for (int v : a.partition.quasi_cliques[i]) out << " " << v;
          out << "\n";
        }
        for (const auto& w : a.partition.warnings) out << "warning: " << w << "\n";
      }
      return success;
    }

    if (*bounds_cmd) {
      json result;
      if (bounds_action == "thresholds") {
        const auto th = thresholds(parse_lambda(lambda_text));
        result = {{"lambda", th.lambda.to_string()},
                  {"t_prime", th.t_prime},
                  {"t_prime_closed_form", th.t_prime_closed_form},
                  {"m_prime", th.m_prime},
                  {"gamma2_cap", th.gamma2_cap},
                  {"isolated_cap", th.isolated_cap},
                  {"M", to_json(constant_m(th.lambda))}};
      } else if (bounds_action == "known-v") {
        result = to_json(known_v(k_param, parse_lambda(lambda_text)));
        if (!ctx.as_json && result["kind"] == "exact") {
          out << result["value"].get<std::int64_t>() << "\n";
          return success;
        }
      } else if (bounds_action == "mu-bound") {
        const auto lambda = parse_lambda(lambda_text);
        if (!lambda.is_integer()) throw usage("mu-bound needs an integer lambda");
        const auto mu = mu_bound(lambda.num());
        if (!ctx.as_json) {
          out << mu << "\n";
          return success;
        }
        result = {{"lambda", lambda.num()}, {"mu_bound", mu}};
      } else {
        result = {{"s", s_param}, {"t", t_param}, {"table", to_json(ramsey_lookup(s_param, t_param))}};
        if (brute_force) {
          const auto r = ramsey_bruteforce(s_param, t_param, 20, ctx.threads);
          result["brute_force"] = r ? json(*r) : json(nullptr);
        }
      }
      out << result.dump(2) << "\n";
      return success;
    }

    if (*search_cmd) {
      sopts.spectral_prune = !no_prune;
      sopts.threads = ctx.threads;
      const auto report = v_search(search_k, parse_lambda(search_lambda), n_max, sopts);
      if (ctx.as_json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "k=" << report.k << " lambda=" << report.lambda.to_string() << " n_max=" << report.n_max << "\n";
        for (const auto& [n, c] : report.counts) out << "  n=" << n << " generated=" << c.generated << " passed=" << c.passed << "\n";
        out << "v = " << (report.exact_v ? std::to_string(*report.exact_v) : std::string("none found")) << "\n";
        for (const auto& e : report.extremal_graphs)
          out << "  " << to_graph6(e.graph) << "  lambda2=" << std::setprecision(12) << e.spectrum.entries.at(e.spectrum.entries.size() > 1 ? 1 : 0).value
              << (e.boundary ? " (boundary)" : "") << "\n";
        for (const auto& note : report.notes) out << "note: " << note << "\n";
      }
      return report.complete ? success : resource_cap;
    }

    if (*verify_cmd) {
      VerifyOptions vopts;
      vopts.threads = ctx.threads;
      bool all_ok = true;
      json results = json::array();
      for (const auto* c : criteria_in_suite(suite)) {
        const auto r = run_criterion(*c, vopts);
        all_ok = all_ok && r.passed;
        if (ctx.as_json) results.push_back(to_json(r));
        else out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << std::setprecision(3) << r.seconds << "s)\n";
      }
      if (ctx.as_json) out << results.dump(2) << "\n";
      return all_ok ? success : verification_failed;
    }
  } catch (const usage& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const unsupported_size& e) {
    err << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return verification_failed;
  }
  return usage_error;
}

}  // namespace hoffgraph::cli
