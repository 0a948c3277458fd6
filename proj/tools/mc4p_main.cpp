// Command line front end: builds tuples, runs the convolution and braid
// machinery, and checks the elliptic side, reporting JSON on stdout.
//
// Exit codes: 0 when every verdict passes, 1 for computation failures or
// failing verdicts (with a machine-readable error field in the former case),
// 2 for usage errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mc4p/json_io.hpp"

using namespace mc4p;

namespace {

struct Verdict {
  std::string name;
  ojson value;
  bool pass;
};

long thread_count() {
  const char* env = std::getenv("MC4P_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  return (end && *end == '\0' && n >= 1) ? n : 1;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParameterError*>(&e)) return "parameter";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const SingularError*>(&e)) return "singular";
  if (dynamic_cast<const EigenvalueError*>(&e)) return "eigenvalue";
  if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
  return "internal";
}

ojson read_json(const std::string& path) {
  if (path == "-") return ojson::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open input file: " + path);
  return ojson::parse(in);
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file: " + path);
  out << body;
}

long totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

long parse_residue(const std::string& s) {
  try {
    size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw ParameterError("expected an integer residue: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw ParameterError("expected an integer residue: " + s);
  }
}

// Runs the body, assembles the report envelope, prints it, and maps the
// outcome onto the exit-code contract.
template <class Body>
int run_command(const std::string& name, const ojson& inputs, Body&& body) {
  ojson report;
  report["command"] = name;
  report["inputs"] = inputs;
  report["threads"] = thread_count();
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    std::vector<Verdict> verdicts;
    ojson data;
    body(verdicts, data);
    ojson vj = ojson::array();
    bool all = true;
    for (const auto& v : verdicts) {
      ojson one;
      one["name"] = v.name;
      one["value"] = v.value;
      one["pass"] = v.pass;
      vj.push_back(one);
      all = all && v.pass;
    }
    report["verdicts"] = vj;
    report["data"] = data;
    code = all ? 0 : 1;
  } catch (const std::exception& e) {
    ojson err;
    err["type"] = error_kind(e);
    err["message"] = e.what();
    report["error"] = err;
    code = 1;
  }
  const auto stop = std::chrono::steady_clock::now();
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();
  std::cout << report.dump(2) << "\n";
  return code;
}

void tuple_verdicts(const MonodromyTuple& t, std::vector<Verdict>& verdicts,
                    ojson& data) {
  const bool star = star_check(t);
  verdicts.push_back({"star", star, star});
  const bool irr = is_irreducible(t);
  verdicts.push_back({"irreducible", irr, irr});
  const TraceCoordinates tc = trace_coordinates(t);
  const bool on_cubic = field_is_zero(cubic_residual(tc));
  verdicts.push_back({"on_cubic", on_cubic, on_cubic});
  data["tuple"] = tuple_to_json(t);
  data["trace_coordinates"] = coords_to_json(tc);
  data["trace_field"] = trace_field_to_json(trace_field(t));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy tuples on the four punctured projective line"};
  app.require_subcommand(1);

  // cayley
  std::string alpha = "1/2", beta = "1/2", out_path, in_path, csv_path;
  auto* cay = app.add_subcommand("cayley", "build a two parameter unipotent tuple");
  cay->add_option("--alpha", alpha, "rational alpha")->required();
  cay->add_option("--beta", beta, "rational beta")->required();
  cay->add_option("--out", out_path, "write the bare tuple JSON here");

  // pushforward
  long chi_m = 2, chi_a = 1, chi_b = 0;
  auto* push = app.add_subcommand("pushforward",
                                  "induce a torsion character through the double cover");
  push->add_option("--m", chi_m, "character modulus")->required();
  push->add_option("--a", chi_a, "first exponent")->required();
  push->add_option("--b", chi_b, "second exponent")->required();
  push->add_option("--out", out_path, "write the bare tuple JSON here");

  // convolve
  long zeta_order = 2;
  auto* conv = app.add_subcommand("convolve", "middle convolution of a tuple");
  conv->add_option("--input", in_path, "tuple JSON file, or - for stdin")->required();
  conv->add_option("--zeta", zeta_order, "order of the convolution scalar (default -1)");
  conv->add_option("--out", out_path, "write the bare tuple JSON here");

  // star-check
  auto* star = app.add_subcommand("star-check", "unipotent boundary verdict for a tuple");
  star->add_option("--input", in_path, "tuple JSON file, or - for stdin")->required();

  // trace-field
  auto* tfield = app.add_subcommand("trace-field", "degree and conductor of the trace field");
  tfield->add_option("--input", in_path, "tuple JSON file, or - for stdin")->required();

  // orbit
  long bound = 10000;
  auto* orb = app.add_subcommand("orbit", "braid square orbit of the trace coordinates");
  orb->add_option("--seed", in_path, "tuple JSON file, or - for stdin")->required();
  orb->add_option("--bound", bound, "stop after this many distinct points");
  orb->add_option("--csv", csv_path, "also dump the points as CSV");

  // cubic
  std::string cx, cy, cz;
  auto* cub = app.add_subcommand("cubic", "the boundary trace relation, optionally evaluated");
  auto* ox = cub->add_option("--x", cx, "rational x coordinate");
  auto* oy = cub->add_option("--y", cy, "rational y coordinate");
  auto* oz = cub->add_option("--z", cz, "rational z coordinate");
  ox->needs(oy)->needs(oz);
  oy->needs(ox)->needs(oz);
  oz->needs(ox)->needs(oy);

  // flow-check
  long lam_res = 2, flow_p = 3, field_q = 11, samples = 100;
  auto* flow = app.add_subcommand("flow-check",
                                  "compare the degree p^2 self map with the group law");
  flow->add_option("--lambda", lam_res, "curve parameter as a residue")->required();
  flow->add_option("--p", flow_p, "odd prime multiplier")->required();
  flow->add_option("--field", field_q, "odd prime field size")->required();
  flow->add_option("--samples", samples, "points sampled over the quadratic extension");

  // torsion-x
  std::string lam_text = "2";
  long tors_m = 2, tors_field = 0;  // 0 means work over the rationals
  auto* tors = app.add_subcommand("torsion-x", "abscissas of the points killed by [m]");
  tors->add_option("--lambda", lam_text, "curve parameter (rational, or residue with --field)")
      ->required();
  tors->add_option("--m", tors_m, "torsion index")->required();
  tors->add_option("--field", tors_field, "odd prime field size");

  // roundtrip
  long rt_bound = 0;
  auto* round = app.add_subcommand(
      "roundtrip", "pushforward, convolve, star-check, parameter match, trace field");
  round->add_option("--m", chi_m, "character modulus")->required();
  round->add_option("--a", chi_a, "first exponent")->required();
  round->add_option("--b", chi_b, "second exponent")->required();
  round->add_option("--bound", rt_bound, "denominator bound for the match (default: m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cay->parsed()) {
    ojson inputs{{"alpha", alpha}, {"beta", beta}};
    return run_command("cayley", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const MonodromyTuple t =
          cayley_solution({rat_from_string(alpha), rat_from_string(beta)});
      tuple_verdicts(t, verdicts, data);
      if (!out_path.empty()) write_text(out_path, tuple_to_json(t).dump(2) + "\n");
    });
  }

  if (push->parsed()) {
    ojson inputs{{"m", chi_m}, {"a", chi_a}, {"b", chi_b}};
    return run_command("pushforward", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const CoverCharacter chi(chi_m, chi_a, chi_b);
      const MonodromyTuple t = induced_pushforward(chi);
      const CycNum zero{Rat(0)};
      const bool traces_zero =
          t.M0().trace().reduced() == zero && t.M1().trace().reduced() == zero &&
          t.Mlambda().trace().reduced() == zero && t.Minf().trace().reduced() == zero;
      verdicts.push_back({"rank2", t.M0().rows() == 2, t.M0().rows() == 2});
      verdicts.push_back({"zero_traces", traces_zero, traces_zero});
      data["character"] =
          ojson{{"m", chi.modulus()}, {"a", chi.a()}, {"b", chi.b()},
                {"exact_order", chi.exact_order()}};
      data["tuple"] = tuple_to_json(t);
      if (!out_path.empty()) write_text(out_path, tuple_to_json(t).dump(2) + "\n");
    });
  }

  if (conv->parsed()) {
    ojson inputs{{"input", in_path}, {"zeta", zeta_order}};
    return run_command("convolve", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const MonodromyTuple t = tuple_from_json(read_json(in_path));
      const ConvolutionScalar c(CycNum::zeta(zeta_order));
      const MonodromyTuple s = middle_convolve(t, c);
      verdicts.push_back({"rank", s.M0().rows(), true});
      data["tuple"] = tuple_to_json(s);
      if (!out_path.empty()) write_text(out_path, tuple_to_json(s).dump(2) + "\n");
    });
  }

  if (star->parsed()) {
    ojson inputs{{"input", in_path}};
    return run_command("star-check", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const MonodromyTuple t = tuple_from_json(read_json(in_path));
      const bool ok = star_check(t);
      verdicts.push_back({"star", ok, ok});
      data["rank"] = t.M0().rows();
      data["trace_coordinates"] =
          t.M0().rows() == 2 ? coords_to_json(trace_coordinates(t)) : ojson(nullptr);
    });
  }

  if (tfield->parsed()) {
    ojson inputs{{"input", in_path}};
    return run_command("trace-field", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const MonodromyTuple t = tuple_from_json(read_json(in_path));
      const TraceField f = trace_field(t);
      verdicts.push_back({"degree", f.degree, true});
      verdicts.push_back({"conductor", f.conductor, true});
      data["trace_field"] = trace_field_to_json(f);
    });
  }

  if (orb->parsed()) {
    ojson inputs{{"seed", in_path}, {"bound", bound}};
    if (!csv_path.empty()) inputs["csv"] = csv_path;
    return run_command("orbit", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const MonodromyTuple t = tuple_from_json(read_json(in_path));
      const OrbitReport r = orbit(t, bound);
      verdicts.push_back({"finite", !r.exceeded, !r.exceeded});
      verdicts.push_back({"size", r.size, true});
      data["orbit"] = orbit_report_to_json(r);
      if (!csv_path.empty()) write_text(csv_path, orbit_csv(r));
    });
  }

  if (cub->parsed()) {
    const bool with_point = !cx.empty();
    ojson inputs = ojson::object();
    if (with_point) inputs = ojson{{"x", cx}, {"y", cy}, {"z", cz}};
    return run_command("cubic", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      data["cubic"] = cayley_cubic_text();
      if (with_point) {
        const CycNum two{Rat(2)};
        const TraceCoordinates tc{two, two, two, CycNum{Rat(-2)},
                                  CycNum{rat_from_string(cx)}, CycNum{rat_from_string(cy)},
                                  CycNum{rat_from_string(cz)}};
        const CycNum res = cubic_residual(tc);
        const bool on_surface = field_is_zero(res);
        verdicts.push_back({"on_surface", on_surface, on_surface});
        data["residual"] = cyc_to_json(res.reduced());
      }
    });
  }

  if (flow->parsed()) {
    ojson inputs{{"lambda", lam_res}, {"p", flow_p}, {"field", field_q}, {"samples", samples}};
    return run_command("flow-check", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const LegendreCurve<Fq> e(Fq(lam_res, field_q));
      const FlowMap<Fq> fm = psi_p_map(e, flow_p);
      const Fq zero(0, field_q), one(1, field_q);
      const Fq lam = e.lambda;
      const auto fixes = [&](const Fq& v) {
        const auto r = fm.map.eval(v);
        return r.has_value() && *r == v;
      };
      const bool branch_fixed =
          fixes(zero) && fixes(one) && fixes(lam) && fm.map.fixes_infinity();
      const auto pts = sample_points(e, 2, samples);
      long agreed = 0;
      for (const auto& q : pts) {
        const auto target = scalar_mul(e, flow_p, q);
        const auto v = fm.map.eval(q.x);
        const bool ok =
            target.infinity ? !v.has_value() : (v.has_value() && *v == target.x);
        if (ok) ++agreed;
      }
      const bool diagram = agreed == static_cast<long>(pts.size()) && !pts.empty();
      verdicts.push_back({"diagram", diagram, diagram});
      verdicts.push_back({"fixes_branch_points", branch_fixed, branch_fixed});
      verdicts.push_back(
          {"formal_degree", fm.formal_degree, fm.formal_degree == flow_p * flow_p});
      const bool sep_expected = flow_p != field_q;
      verdicts.push_back({"separable", fm.separable, fm.separable == sep_expected});
      data["map"] = rational_map_to_json(fm.map);
      data["samples_checked"] = static_cast<long>(pts.size());
    });
  }

  if (tors->parsed()) {
    ojson inputs{{"lambda", lam_text}, {"m", tors_m}};
    if (tors_field != 0) inputs["field"] = tors_field;
    return run_command("torsion-x", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      if (tors_field != 0) {
        const long q = tors_field;
        const LegendreCurve<Fq> e(Fq(parse_residue(lam_text), q));
        const Poly<Fq> t = torsion_x_poly(e, tors_m);
        data["poly"] = poly_to_json(t);
        ojson roots = ojson::array();
        bool all_killed = true;
        long found = 0;
        for (long v = 0; v < q; ++v) {
          if (!t.eval(Fq(v, q)).is_zero()) continue;
          ++found;
          const auto o = is_torsion_x(e, Fq(v, q), (q + 1) * (q + 1));
          ojson entry;
          entry["x"] = v;
          entry["order"] = o ? ojson(*o) : ojson(nullptr);
          roots.push_back(entry);
          all_killed = all_killed && o.has_value() && tors_m % *o == 0;
        }
        data["roots"] = roots;
        verdicts.push_back({"roots_found", found, true});
        verdicts.push_back({"roots_killed", all_killed, all_killed});
      } else {
        const LegendreCurve<Rat> e(rat_from_string(lam_text));
        const Poly<Rat> t = torsion_x_poly(e, tors_m);
        data["poly"] = poly_to_json(t);
        verdicts.push_back({"degree", t.degree(), true});
      }
    });
  }

  if (round->parsed()) {
    ojson inputs{{"m", chi_m}, {"a", chi_a}, {"b", chi_b}};
    if (rt_bound > 0) inputs["bound"] = rt_bound;
    return run_command("roundtrip", inputs, [&](std::vector<Verdict>& verdicts, ojson& data) {
      const CoverCharacter chi(chi_m, chi_a, chi_b);
      const MonodromyTuple t = induced_pushforward(chi);
      const MonodromyTuple s = middle_convolve(t, ConvolutionScalar::minus_one());
      const bool star_ok = star_check(s);
      const bool irr = s.M0().rows() == 2 && is_irreducible(s);
      std::optional<CayleyParams> match;
      if (star_ok && irr)
        match = match_cayley(s, rt_bound > 0 ? rt_bound : chi.modulus());
      const TraceField f = trace_field(s);
      const long mprime = chi.exact_order();
      const long expected_degree = std::max(1L, totient(mprime) / 2);
      verdicts.push_back({"star", star_ok, star_ok});
      verdicts.push_back({"matched", match.has_value(), match.has_value()});
      verdicts.push_back({"trace_degree", f.degree, f.degree == expected_degree});
      data["character"] =
          ojson{{"m", chi.modulus()}, {"a", chi.a()}, {"b", chi.b()},
                {"exact_order", mprime}};
      data["pushforward"] = tuple_to_json(t);
      data["convolved"] = tuple_to_json(s);
      data["matched"] = match ? params_to_json(*match) : ojson(nullptr);
      data["trace_field"] = trace_field_to_json(f);
    });
  }

  std::cerr << "no subcommand selected\n";
  return 2;
}
