// seifert-lspace: command line front end.
//
// Exit codes: decide returns 0 for an L-space and 1 otherwise; family run
// and reproduce return 1 when a claim fails; every command returns 2 on
// malformed input or invalid parameters.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seifert_lspace.hpp"
#include "seifert_lspace/serialize.hpp"

namespace {

using namespace seifert_lspace;
using Clock = std::chrono::steady_clock;

struct Output {
  bool json = false;
  bool floats = false;
  bool timing = false;
  Clock::time_point start = Clock::now();

  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }

  void emit_json(Json j) const {
    if (floats) add_approximations(j);
    if (timing) j["timing_ms"] = elapsed_ms();
    std::cout << j.dump(2) << "\n";
  }

  void emit_text_footer() const {
    if (timing) std::cout << "timing: " << std::fixed << std::setprecision(3) << elapsed_ms() << " ms\n";
  }
};

std::string approx(const Rational& r, const Output& out) {
  if (!out.floats) return r.str();
  std::ostringstream s;
  s << r.str() << " (~" << std::setprecision(10) << r.to_double() << ")";
  return s.str();
}

std::string form_text(const SeifertForm& f, const Output& out) {
  if (!out.floats || f.base == Base::RP2) return to_string(f);
  std::string s = to_string(f) + " (~";
  for (std::size_t i = 0; i < f.slopes.size(); ++i) {
    std::ostringstream o;
    o << std::setprecision(6) << f.slopes[i].to_double();
    s += (i ? ", " : "") + o.str();
  }
  return s + ")";
}

void print_verdict(const LSpaceVerdict& v) {
  std::cout << "verdict: " << (v.is_lspace ? "L-space" : "not an L-space") << "\n";
  std::cout << "reason: " << to_string(v.reason) << "\n";
  if (v.witness)
    std::cout << "witness: k=" << v.witness->k << " a=" << v.witness->a << (v.witness_on_dual ? " (dual triple)" : "")
              << "\n";
  if (v.search_bound) std::cout << "search bound: k <= " << *v.search_bound << "\n";
}

// ---------------------------------------------------------------------------

int cmd_decide(const std::string& text, const Output& out) {
  const RawSeifert raw = parse_raw_seifert(text);
  const SeifertForm f = normalize(raw);
  const LSpaceVerdict v = decide(f);
  if (out.json) {
    out.emit_json({{"command", "decide"}, {"input", text}, {"form", form_json(f)}, {"verdict", verdict_json(v)}});
  } else {
    std::cout << "form: " << form_text(f, out) << "\n";
    print_verdict(v);
    out.emit_text_footer();
  }
  return v.is_lspace ? 0 : 1;
}

int cmd_h1(const std::string& text, const Output& out) {
  const SeifertForm f = parse_seifert(text);
  const Classification c = classify(f);
  if (out.json) {
    out.emit_json({{"command", "h1"}, {"input", text}, {"form", form_json(f)}, {"classification", classification_json(c)}});
  } else {
    std::cout << "form: " << form_text(f, out) << "\n";
    std::cout << "h1: " << (c.h1 ? c.h1->str() : std::string("n/a")) << "\n";
    std::cout << "tag: " << to_string(c.tag) << "\n";
    if (!c.summand_orders.empty()) std::cout << "summand orders: " << integer_list(c.summand_orders) << "\n";
    out.emit_text_footer();
  }
  return 0;
}

int cmd_normalize(const std::string& text, const Output& out) {
  const RawSeifert raw = parse_raw_seifert(text);
  const SeifertForm f = normalize(raw);
  if (out.json) {
    Json j{{"command", "normalize"}, {"input", text}, {"form", form_json(f)}};
    if (f.base == Base::S2 && f.degenerate_count == 0) j["euler"] = rational_json(euler_number(f));
    out.emit_json(j);
  } else {
    std::cout << "form: " << form_text(f, out) << "\n";
    if (f.base == Base::S2 && f.degenerate_count == 0) std::cout << "euler: " << approx(euler_number(f), out) << "\n";
    out.emit_text_footer();
  }
  return 0;
}

int cmd_threshold(const std::string& b, const std::string& r1, const std::string& r2, const Output& out) {
  const ThirdSlotThreshold th = third_slot_threshold(parse_integer(b), parse_rational(r1), parse_rational(r2));
  if (out.json) {
    out.emit_json({{"command", "threshold"}, {"threshold", threshold_json(th)}});
  } else {
    std::cout << "b: " << th.b << "\nr1: " << approx(th.r1, out) << "\nr2: " << approx(th.r2, out) << "\n";
    std::cout << "L-space third slopes: ";
    switch (th.kind) {
      case SetKind::All: std::cout << "all of (0, 1)"; break;
      case SetKind::Empty: std::cout << "none"; break;
      case SetKind::UpClosed:
        std::cout << (th.attained ? "[" : "(") << approx(th.t, out) << ", 1)";
        break;
      case SetKind::DownClosed:
        std::cout << "(0, " << approx(th.t, out) << (th.attained ? "]" : ")");
        break;
    }
    std::cout << "\nkind: " << to_string(th.kind) << "\n";
    out.emit_text_footer();
  }
  return 0;
}

void print_tail(const char* name, const TailCertificate& t, bool positive) {
  std::cout << name << ": " << (t.lspace ? "L-space" : "not L-space") << " for n " << (positive ? ">= " : "<= ")
            << t.start << " (" << to_string(t.status) << ")\n";
}

void print_report(const FamilyReport& rep, const Output& out, const std::string& index = "n") {
  std::cout << std::setw(8) << index << "  " << std::setw(12) << "slope" << "  " << std::setw(10) << "verdict"
            << "  form\n";
  for (const auto& r : rep.records)
    std::cout << std::setw(8) << r.n << "  " << std::setw(12) << r.slope << "  " << std::setw(10)
              << (r.verdict.is_lspace ? "L" : "not-L") << "  " << form_text(r.form, out) << "\n";
  std::cout << "regime: " << to_string(rep.regime) << "\n";
  std::cout << "limit: " << form_text(rep.limit, out) << " " << (rep.limit_verdict.is_lspace ? "L-space" : "not L-space")
            << "\n";
  if (rep.pole) std::cout << "pole: " << *rep.pole << "\n";
  print_tail("positive tail", rep.tail_pos, true);
  print_tail("negative tail", rep.tail_neg, false);
  std::cout << "exceptional in window: [";
  for (std::size_t i = 0; i < rep.exceptional_n.size(); ++i) std::cout << (i ? "," : "") << rep.exceptional_n[i];
  std::cout << "]\n";
  if (rep.middle_decided) std::cout << "non-L-space between tails: " << integer_list(rep.middle_non_lspace) << "\n";
  if (auto all = rep.non_lspace_n()) std::cout << "non-L-space overall: " << integer_list(*all) << "\n";
}

int cmd_twist_scan(const SeiferterData& d, Window window, const Output& out) {
  const FamilyReport rep = classify_family(d, window);
  if (out.json) {
    out.emit_json({{"command", "twist-scan"}, {"seiferter", seiferter_json(d)}, {"report", report_json(rep)}});
  } else {
    print_report(rep, out);
    out.emit_text_footer();
  }
  return 0;
}

int cmd_family_list(const Output& out) {
  if (out.json) {
    Json j = Json::array();
    for (const auto& b : family_builders()) j.push_back({{"name", b.name}, {"params", b.param_names}, {"summary", b.summary}});
    out.emit_json({{"command", "family list"}, {"families", j}});
    return 0;
  }
  for (const auto& b : family_builders()) {
    std::string params;
    for (const auto& p : b.param_names) params += " " + p + "=<int>";
    std::cout << b.name << params << "\n    " << b.summary << "\n";
  }
  return 0;
}

int cmd_family_run(const std::string& name, const std::vector<std::string>& params, Window window, const Output& out) {
  const FamilySpec spec = find_family_builder(name).build(parse_params(params));
  const FamilyRun run = run_family(spec, window);
  const bool ok = run.check.window_ok && run.check.global_ok.value_or(true);
  if (out.json) {
    out.emit_json({{"command", "family run"}, {"family", run_json(run)}});
  } else {
    std::cout << "family: " << family_label(spec) << "\n" << "description: " << spec.description << "\n";
    std::cout << "claimed: " << spec.claimed.str() << "\n";
    std::cout << std::setw(8) << "n" << "  " << std::setw(12) << "slope" << "  " << std::setw(10) << "verdict" << "  form\n";
    for (const auto& m : run.members)
      std::cout << std::setw(8) << m.n << "  " << std::setw(12) << (m.slope ? m.slope->str() : std::string("?")) << "  "
                << std::setw(10) << (m.verdict.is_lspace ? "L" : "not-L") << "  " << form_text(m.form, out) << "\n";
    if (run.report) {
      std::cout << "seiferter index: j = " << (spec.index_sign < 0 ? "-n" : "n")
                << (spec.index_offset == 0 ? std::string() : " + " + spec.index_offset.str())
                << (spec.mirrored ? ", mirrored" : "") << "\n";
      print_tail("positive tail (j)", run.report->tail_pos, true);
      print_tail("negative tail (j)", run.report->tail_neg, false);
    }
    std::cout << "window check: " << (run.check.window_ok ? "ok" : "FAILED at " + integer_list(run.check.window_failures)) << "\n";
    std::cout << "global check: "
              << (run.check.global_ok ? (*run.check.global_ok ? "ok" : "FAILED at " + integer_list(run.check.global_failures))
                                      : "undecided")
              << "\n";
    out.emit_text_footer();
  }
  return ok ? 0 : 1;
}

int cmd_reproduce(const std::string& only, const std::string& perturb, const Output& out) {
  const auto results = run_corpus(only, perturb);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  if (out.json) {
    Json cases = Json::array();
    for (const auto& r : results)
      cases.push_back({{"name", r.c->name}, {"kind", to_string(r.c->kind)}, {"input", r.c->input},
                       {"expected", r.expected}, {"actual", r.actual}, {"anchor", r.c->anchor}, {"pass", r.pass}});
    out.emit_json({{"command", "reproduce"}, {"cases", cases}, {"failed", failed}, {"total", results.size()}});
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.c->name << "  [" << to_string(r.c->kind) << "] " << r.c->input << "\n";
      if (!r.pass) std::cout << "     expected: " << r.expected << "\n     actual:   " << r.actual << "\n";
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " passed\n";
    out.emit_text_footer();
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L-space decisions for small Seifert fibered spaces and twist families"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "JSON output");
  app.add_flag("--float", out.floats, "add decimal approximations (display only)");
  app.add_flag("--timing", out.timing, "report wall-clock time");

  std::string form_text_arg;
  auto* decide_cmd = app.add_subcommand("decide", "decide whether a Seifert form is an L-space");
  decide_cmd->add_option("form", form_text_arg, "e.g. \"SFS[S2; -1; 1/2, 1/3, 1/7]\"")->required();
  auto* h1_cmd = app.add_subcommand("h1", "order of H_1 and the topological tag");
  h1_cmd->add_option("form", form_text_arg)->required();
  auto* norm_cmd = app.add_subcommand("normalize", "normal form and euler number");
  norm_cmd->add_option("form", form_text_arg)->required();

  std::vector<std::string> th_args;
  auto* th_cmd = app.add_subcommand("threshold", "L-space third slopes of S^2(b; r1, r2, r)");
  th_cmd->add_option("values", th_args, "b r1 r2")->expected(3)->required();

  std::string window_text = "-50..50";
  SeiferterData sd;
  std::string sd_b = "0", sd_r1, sd_r2, sd_alpha, sd_beta, sd_alpha3 = "1", sd_beta3 = "0", sd_m = "0", sd_l = "0";
  auto* scan_cmd = app.add_subcommand("twist-scan", "classify the twist family of a seiferter");
  scan_cmd->add_option("--b", sd_b, "integer b")->capture_default_str();
  scan_cmd->add_option("--r1", sd_r1, "first fixed slope in (0, 1)")->required();
  scan_cmd->add_option("--r2", sd_r2, "second fixed slope in (0, 1)")->required();
  scan_cmd->add_option("--alpha", sd_alpha)->required();
  scan_cmd->add_option("--beta", sd_beta)->required();
  scan_cmd->add_option("--alpha3", sd_alpha3)->capture_default_str();
  scan_cmd->add_option("--beta3", sd_beta3)->capture_default_str();
  scan_cmd->add_option("--m", sd_m, "surgery slope of the knot")->capture_default_str();
  scan_cmd->add_option("--l", sd_l, "linking number")->capture_default_str();
  scan_cmd->add_option("--window", window_text, "n range lo..hi")->capture_default_str();

  auto* family_cmd = app.add_subcommand("family", "catalog families");
  family_cmd->require_subcommand(1);
  auto* family_list = family_cmd->add_subcommand("list", "list family names and parameters");
  std::string family_name;
  std::vector<std::string> family_params;
  auto* family_run = family_cmd->add_subcommand("run", "run a family and check its claim");
  family_run->add_option("name", family_name)->required();
  family_run->add_option("params", family_params, "name=value pairs");
  family_run->add_option("--window", window_text, "n range lo..hi")->capture_default_str();

  std::string only, perturb;
  auto* repro_cmd = app.add_subcommand("reproduce", "replay the embedded example corpus");
  repro_cmd->add_option("--only", only, "run a single named case");
  repro_cmd->add_option("--perturb", perturb, "alter the expected value of a named case");

  // window values start with '-'; accept "--window -5..5" as well as "--window=-5..5"
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--window") {
      args[i] = "--window=" + args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decide_cmd) return cmd_decide(form_text_arg, out);
    if (*h1_cmd) return cmd_h1(form_text_arg, out);
    if (*norm_cmd) return cmd_normalize(form_text_arg, out);
    if (*th_cmd) return cmd_threshold(th_args[0], th_args[1], th_args[2], out);
    if (*scan_cmd) {
      sd.b = parse_integer(sd_b);
      sd.r1 = parse_rational(sd_r1);
      sd.r2 = parse_rational(sd_r2);
      sd.alpha = parse_integer(sd_alpha);
      sd.beta = parse_integer(sd_beta);
      sd.alpha3 = parse_integer(sd_alpha3);
      sd.beta3 = parse_integer(sd_beta3);
      sd.m = parse_integer(sd_m);
      sd.l = parse_integer(sd_l);
      return cmd_twist_scan(sd, parse_window(window_text), out);
    }
    if (*family_list) return cmd_family_list(out);
    if (*family_run) return cmd_family_run(family_name, family_params, parse_window(window_text), out);
    if (*repro_cmd) return cmd_reproduce(only, perturb, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
