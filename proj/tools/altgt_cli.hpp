#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altgt/altgt.hpp"

namespace altgt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct options {
  std::string partition_text;
  std::string label_text;
  std::string format;
  std::string chain = "alternating";
  std::string suite = "all";
  int generator = 0;
  int max_n = 0;
  bool normalize = false;
};

inline int cmd_syt(const options& o, std::ostream& out) {
  const partition lambda = parse_partition(o.partition_text);
  const auto tableaux = enumerate_syt(lambda);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& t : tableaux) arr.push_back(to_json(t));
    out << json{{"shape", to_json(lambda)}, {"count", tableaux.size()}, {"tableaux", arr}}.dump(2) << '\n';
  } else {
    for (const auto& t : tableaux) out << to_string(t) << '\n';
  }
  return exit_ok;
}

inline int cmd_yor(const options& o, std::ostream& out) {
  const partition lambda = parse_partition(o.partition_text);
  if (o.generator < 1 || o.generator >= lambda.size())
    throw parse_error("generator index out of range 1.." + std::to_string(lambda.size() - 1), std::to_string(o.generator));
  const auto basis = enumerate_syt(lambda);
  const scalar_matrix m = rep_matrix(lambda, o.generator);
  if (o.format == "json") {
    json b = json::array();
    for (const auto& t : basis) b.push_back(to_json(t));
    out << json{{"shape", to_json(lambda)}, {"generator", o.generator}, {"basis", b}, {"matrix", to_json(m)}}.dump(2)
        << '\n';
  } else if (o.format == "latex") {
    out << "% basis:";
    for (const auto& t : basis) out << ' ' << to_string(t);
    out << '\n' << to_latex(m) << '\n';
  } else {
    out << "basis:";
    for (const auto& t : basis) out << ' ' << to_string(t);
    out << '\n' << to_string(m);
  }
  return exit_ok;
}

inline int cmd_assoc(const options& o, std::ostream& out) {
  const partition lambda = parse_partition(o.partition_text);
  if (!is_self_conjugate(lambda)) throw parse_error("partition is not self-conjugate", o.partition_text);
  const auto basis = enumerate_syt(lambda);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& t : basis)
      arr.push_back({{"tableau", to_json(t)}, {"coeff", to_json(assoc_coeff(lambda, t))}, {"conjugate", to_json(conjugate_tableau(t))}});
    out << json{{"shape", to_json(lambda)}, {"reference", to_json(reference_tableau(lambda))}, {"entries", arr}}.dump(2)
        << '\n';
  } else {
    std::size_t width = 1;
    for (const auto& t : basis) width = std::max(width, to_string(t).size());
    out << "reference " << to_string(reference_tableau(lambda)) << '\n';
    for (const auto& t : basis) {
      out << std::left << std::setw(static_cast<int>(width)) << to_string(t) << "  " << std::right << std::setw(2)
          << to_string(assoc_coeff(lambda, t)) << "  " << to_string(conjugate_tableau(t)) << '\n';
    }
  }
  return exit_ok;
}

inline int cmd_bratteli(const options& o, std::ostream& out) {
  bratteli_diagram g;
  if (o.chain == "symmetric") {
    if (o.max_n < 1) throw parse_error("--max-n must be at least 1", std::to_string(o.max_n));
    g = young_graph(o.max_n);
  } else {
    if (o.max_n < 2) throw parse_error("--max-n must be at least 2", std::to_string(o.max_n));
    g = bratteli(o.max_n);
  }
  if (o.format == "json") {
    json j = to_json(g);
    j["chain"] = o.chain;
    j["max_n"] = o.max_n;
    out << j.dump(2) << '\n';
  } else {
    write_dot(out, g, o.chain == "symmetric" ? "young" : "alternating");
  }
  return exit_ok;
}

inline int cmd_paths(const options& o, std::ostream& out) {
  const alt_label alpha = parse_label(o.label_text);
  if (alpha.size() < 2) throw parse_error("labels need n >= 2", o.label_text);
  const auto reps = geodesic_representatives(alpha);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& p : reps) {
      const int r = branch_count_r(p);
      arr.push_back({{"path", to_json(p)}, {"r", r}, {"class_size", class_members(p).size()}});
    }
    out << json{{"label", to_json(alpha)}, {"dimension", dim_alt(alpha)}, {"representatives", arr}}.dump(2) << '\n';
  } else {
    for (const auto& p : reps)
      out << to_string(p) << "  r=" << branch_count_r(p) << "  class_size=" << class_members(p).size() << '\n';
  }
  return exit_ok;
}

inline int cmd_gt(const options& o, std::ostream& out) {
  const alt_label alpha = parse_label(o.label_text);
  if (alpha.size() < 2) throw parse_error("labels need n >= 2", o.label_text);
  const auto basis = gt_basis(alpha, o.normalize);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& e : basis) arr.push_back(to_json(e));
    out << arr.dump(2) << '\n';
  } else if (o.format == "latex") {
    out << "\\begin{align*}\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
      out << "u_{(";
      for (std::size_t j = 0; j < basis[k].path.labels().size(); ++j)
        out << (j > 0 ? "," : "") << to_latex(basis[k].path.labels()[j]);
      out << ")} &= " << to_latex(basis[k].vector) << (k + 1 < basis.size() ? " \\\\\n" : "\n");
    }
    out << "\\end{align*}\n";
  } else {
    for (const auto& e : basis) out << "u[" << to_string(e.path) << "] = " << to_string(e.vector) << '\n';
  }
  return exit_ok;
}

inline int cmd_verify(const options& o, std::ostream& out) {
  report r;
  if (o.suite == "yor" || o.suite == "all") r.append(verify_yor(o.max_n));
  if (o.suite == "assoc" || o.suite == "all") r.append(verify_associator(o.max_n));
  if (o.suite == "gt" || o.suite == "all") r.append(verify_gt_levels(o.max_n));
  if (o.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << to_string(r) << r.results.size() - r.failures() << " passed, " << r.failures() << " failed\n";
  }
  return r.passed() ? exit_ok : exit_verify_failed;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gelfand-Tsetlin bases for alternating groups in Young's orthogonal form"};
  app.require_subcommand(1);
  detail::options o;

  auto* syt = app.add_subcommand("syt", "list standard Young tableaux of a shape");
  syt->add_option("partition", o.partition_text, "partition, e.g. 4,1,1")->required();
  syt->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* yor = app.add_subcommand("yor", "matrix of a simple transposition in Young's orthogonal form");
  yor->add_option("partition", o.partition_text, "partition, e.g. 3,1")->required();
  yor->add_option("--gen", o.generator, "index i of s_i = (i, i+1)")->required();
  yor->add_option("--format", o.format, "text|json|latex")->check(CLI::IsMember({"text", "json", "latex"}));

  auto* assoc = app.add_subcommand("assoc", "associator table (T, c_T, T') for a self-conjugate shape");
  assoc->add_option("partition", o.partition_text, "self-conjugate partition, e.g. 3,2,1")->required();
  assoc->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* brat = app.add_subcommand("bratteli", "branching graph of the symmetric or alternating tower");
  brat->add_option("--chain", o.chain, "symmetric|alternating")->check(CLI::IsMember({"symmetric", "alternating"}));
  brat->add_option("--max-n", o.max_n, "top level")->required();
  brat->add_option("--format", o.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  auto* paths = app.add_subcommand("paths", "geodesic representatives and class sizes");
  paths->add_option("label", o.label_text, "label, e.g. 4,1,1 or 3,1,1^+")->required();
  paths->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* gt = app.add_subcommand("gt", "Gelfand-Tsetlin basis of an alternating-group irreducible");
  gt->add_option("label", o.label_text, "label, e.g. 4,1,1 or 2,1^+")->required();
  gt->add_option("--format", o.format, "text|json|latex")->check(CLI::IsMember({"text", "json", "latex"}));
  gt->add_flag("--normalize", o.normalize, "scale every vector to unit length");

  auto* verify = app.add_subcommand("verify", "run the exact verification suites");
  verify->add_option("--suite", o.suite, "yor|assoc|gt|all")->check(CLI::IsMember({"yor", "assoc", "gt", "all"}));
  verify->add_option("--max-n", o.max_n, "largest n checked")->required()->check(CLI::Range(2, 12));
  verify->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (syt->parsed()) return detail::cmd_syt(o, out);
    if (yor->parsed()) return detail::cmd_yor(o, out);
    if (assoc->parsed()) return detail::cmd_assoc(o, out);
    if (brat->parsed()) return detail::cmd_bratteli(o, out);
    if (paths->parsed()) return detail::cmd_paths(o, out);
    if (gt->parsed()) return detail::cmd_gt(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace altgt::cli
