#pragma once

// hkbase command-line front end. run() is separate from main() so the test
// suite can drive it in-process.
//
// Exit status: 0 success, 1 domain/hypothesis/consistency failure (including
// contexts that fail validation), 2 malformed input.

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hkbase/hkbase.hpp"

namespace hkbase::cli {

using io::json;

enum class Format { text, json };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string class_spec;  // "3,1"
  Format format = Format::text;
};

inline ClassVector parse_class(const std::string& spec) {
  std::vector<Integer> coords;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw MalformedInput("--class: empty coordinate in \"" + spec + "\"");
    coords.push_back(io::integer_from_json(json(tok.substr(b, e - b + 1)), "--class"));
  }
  if (coords.empty()) throw MalformedInput("--class: no coordinates given");
  return ClassVector(std::move(coords));
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline GeometricContext load_context(const std::string& path) {
  return GeometricContext(io::context_data_from_json(io::read_json_file(path)));
}

inline ClassVector class_for(const GeometricContext& ctx, const std::string& spec) {
  if (spec.empty()) throw MalformedInput("--class is required for this command");
  ClassVector v = parse_class(spec);
  if (v.size() != ctx.lattice().rank()) {
    throw MalformedInput("--class " + v.str() + " has length " + std::to_string(v.size()) +
                         " but the lattice has rank " + std::to_string(ctx.lattice().rank()));
  }
  return v;
}

// rr-eval / nl-types accept a context file, a bare deformation file, or --kind/--n.
inline DeformationType load_deformation(const std::string& path, const std::string& kind, int n) {
  if (!path.empty()) {
    const json j = io::read_json_file(path);
    if (j.is_object() && j.contains("deformation")) return io::deformation_from_json(j.at("deformation"));
    return io::deformation_from_json(j);
  }
  if (kind.empty()) throw MalformedInput("need --input or --kind/--n");
  return io::deformation_from_json(json{{"kind", kind}, {"n", n}});
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const GeometricContext ctx = load_context(cfg.input_path);
  const ClassVector H = class_for(ctx, cfg.class_spec);
  const Classification c = classify_report(ctx, H);
  if (cfg.format == Format::json) {
    emit(out, io::classification_to_json(c));
    return 0;
  }
  out << "H = " << H.str() << "\n";
  out << "q(H) = " << c.q_H << "\n";
  out << "RR(q(H)) = " << c.rr_value << "\n";
  out << "binomial inversion: " << (c.m ? "m = " + c.m->str() : std::string("none")) << "\n";
  out << "certificates: monotonic=" << (c.monotonic ? "yes" : "no")
      << " strong_rlf=" << (c.strong_rlf ? "yes" : "no") << "\n";
  if (c.decomposition) {
    const auto& d = *c.decomposition;
    out << "base divisor: yes\n";
    out << "  H = " << d.m << "*L + F, L = " << d.L.str() << ", F = " << d.F.str()
        << ", (L,F) = " << d.d << "\n";
  } else {
    out << "base divisor: no\n";
  }
  return 0;
}

inline int cmd_reflect_bk(const RunConfig& cfg, std::ostream& out) {
  const GeometricContext ctx = load_context(cfg.input_path);
  const ClassVector alpha = class_for(ctx, cfg.class_spec);
  const ReflectionTrace t = reflect_into_bk(ctx, alpha);
  if (cfg.format == Format::json) {
    emit(out, io::trace_to_json(t));
    return 0;
  }
  out << "alpha = " << alpha.str() << ", (alpha,h) = " << pairing(ctx.lattice(), alpha, ctx.ample())
      << "\n";
  out << std::left << std::setw(6) << "step" << std::setw(10) << "(a_i,h)" << std::setw(20) << "ped"
      << std::setw(8) << "a" << "(a_{i+1},h)\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out << std::left << std::setw(6) << i << std::setw(10) << s.h_before.str() << std::setw(20)
        << s.ped.str() << std::setw(8) << s.multiplicity.str() << s.h_after.str() << "\n";
  }
  out << "result = " << t.result.str() << " after " << t.steps.size() << " reflection(s)\n";
  return 0;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ContextData data = io::context_data_from_json(io::read_json_file(cfg.input_path));
  const ValidationReport rep = validate_context(data);
  if (cfg.format == Format::json) {
    emit(out, io::validation_to_json(rep));
  } else {
    for (const auto& i : rep.items) {
      out << (i.passed ? "PASS  " : "FAIL  ") << i.subject << ": " << i.check;
      if (!i.detail.empty()) out << " (" << i.detail << ")";
      out << "\n";
    }
    out << (rep.ok() ? "context valid\n" : "context INVALID\n");
  }
  if (const auto* f = rep.first_failure()) {
    err << "error: " << f->subject << ": " << f->check;
    if (!f->detail.empty()) err << " (" << f->detail << ")";
    err << "\n";
    return 1;
  }
  return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice computations for base divisors on irreducible symplectic varieties"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string kind;
  int n = 0;
  std::string q_string;
  long bound = 0;
  long n_min = 2, n_max = 10, m_min = 2, m_max = 30, d_min = 1, d_max = 30;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_input = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-i,--input", cfg.input_path, "Context JSON file");
    if (required) o->required();
  };
  const auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", cfg.class_spec, "Class coordinates, comma separated (use --class=-1,2 for a leading minus)")
        ->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether H has a base divisor");
  add_input(classify_cmd, true);
  add_class(classify_cmd);
  add_format(classify_cmd);

  auto* reflect_cmd = app.add_subcommand("reflect-bk", "Reflect a class into the birational Kahler cone closure");
  add_input(reflect_cmd, true);
  add_class(reflect_cmd);
  add_format(reflect_cmd);

  auto* rr_cmd = app.add_subcommand("rr-eval", "Evaluate the Riemann-Roch polynomial");
  add_input(rr_cmd, false);
  rr_cmd->add_option("--kind", kind, "K3n or Kumn")->check(CLI::IsMember({"K3n", "Kumn"}));
  rr_cmd->add_option("--n", n, "Half dimension");
  rr_cmd->add_option("--q", q_string, "Value of q(L)")->required();
  add_format(rr_cmd);

  auto* kumn_cmd = app.add_subcommand("scan-kumn", "Exhaustive search for Kum^n base divisor types");
  kumn_cmd->add_option("--n-min", n_min);
  kumn_cmd->add_option("--n-max", n_max);
  kumn_cmd->add_option("--m-min", m_min);
  kumn_cmd->add_option("--m-max", m_max);
  kumn_cmd->add_option("--d-min", d_min);
  kumn_cmd->add_option("--d-max", d_max);
  add_format(kumn_cmd);

  auto* nl_cmd = app.add_subcommand("nl-types", "Numerical Noether-Lefschetz types for q(H)");
  add_input(nl_cmd, false);
  nl_cmd->add_option("--kind", kind, "K3n or Kumn")->check(CLI::IsMember({"K3n", "Kumn"}));
  nl_cmd->add_option("--n", n, "Half dimension");
  nl_cmd->add_option("--q-h", q_string, "Value of q(H)")->required();
  add_format(nl_cmd);

  auto* rank2_cmd = app.add_subcommand("rank2-scan", "Candidate exceptional classes of U");
  rank2_cmd->add_option("--bound", bound, "Coefficient bound")->required();
  add_format(rank2_cmd);

  auto* validate_cmd = app.add_subcommand("validate-context", "Check every context invariant");
  add_input(validate_cmd, true);
  add_format(validate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::text;

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (reflect_cmd->parsed()) return cmd_reflect_bk(cfg, out);
    if (validate_cmd->parsed()) return cmd_validate(cfg, out, err);

    if (rr_cmd->parsed()) {
      const DeformationType t = load_deformation(cfg.input_path, kind, n);
      const Integer q = io::integer_from_json(json(q_string), "--q");
      const Integer v = rr_eval(t, q);
      if (cfg.format == Format::json) {
        emit(out, json{{"deformation", io::deformation_to_json(t)},
                       {"q", io::integer_to_json(q)},
                       {"rr_value", io::integer_to_json(v)}});
      } else {
        out << "RR_" << t.label() << "(" << q << ") = " << v << "\n";
      }
      return 0;
    }

    if (nl_cmd->parsed()) {
      const DeformationType t = load_deformation(cfg.input_path, kind, n);
      const Integer qH = io::integer_from_json(json(q_string), "--q-h");
      const auto types = nl_numerical_types(t, qH);
      if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto& x : types) {
          arr.push_back({{"m", io::integer_to_json(x.m)},
                         {"d", io::integer_to_json(x.d)},
                         {"qF", io::integer_to_json(x.qF)}});
        }
        emit(out, json{{"deformation", io::deformation_to_json(t)},
                       {"q_H", io::integer_to_json(qH)},
                       {"types", std::move(arr)}});
      } else {
        out << types.size() << " numerical type(s) for " << t.label() << ", q(H) = " << qH << "\n";
        for (const auto& x : types) out << "  m = " << x.m << ", d = " << x.d << ", q(F) = " << x.qF << "\n";
      }
      return 0;
    }

    if (kumn_cmd->parsed()) {
      const auto rep = kumn_nonexistence_search({n_min, n_max}, {m_min, m_max}, {d_min, d_max});
      if (cfg.format == Format::json) {
        json sols = json::array();
        for (const auto& s : rep.solutions) sols.push_back({{"n", s.n}, {"m", s.m}, {"d", s.d}, {"qF", s.qF}});
        emit(out, json{{"ranges",
                        {{"n", {n_min, n_max}}, {"m", {m_min, m_max}}, {"d", {d_min, d_max}}}},
                       {"case1_checked", rep.case1_checked},
                       {"case2_checked", rep.case2_checked},
                       {"case2_lower_bound", rep.case2_lower_bound},
                       {"solutions", std::move(sols)}});
      } else {
        out << "checked " << rep.case1_checked << " case-1 and " << rep.case2_checked
            << " case-2 points\n";
        for (const auto& s : rep.solutions)
          out << "  n = " << s.n << ", m = " << s.m << ", d = " << s.d << ", q(F) = " << s.qF << "\n";
        out << rep.solutions.size() << " solutions found\n";
      }
      return 0;
    }

    if (rank2_cmd->parsed()) {
      const auto classes = rank2_exceptional_scan(bound);
      if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto& v : classes) arr.push_back(io::vector_to_json(v));
        emit(out, json{{"bound", bound}, {"classes", std::move(arr)}});
      } else {
        out << classes.size() << " class(es) (a,b) = aE + bF with q < 0 and |ab| <= gcd(a,b):\n";
        for (const auto& v : classes) out << "  " << v.str() << "\n";
      }
      return 0;
    }
  } catch (const MalformedInput& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "error: hypothesis not certified: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hkbase::cli
