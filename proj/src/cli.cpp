#include "dnq/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "dnq/builder.hpp"
#include "dnq/conjecture.hpp"
#include "dnq/pell.hpp"
#include "dnq/serialize.hpp"

namespace dnq::cli {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NonPositiveRadicand:
    case Errc::NotSquareFree:
    case Errc::WrongResidue:
    case Errc::RadicandTooLarge:
    case Errc::PerfectSquare:
      return exit_code::kInvalidRadicand;
    case Errc::BoundOverflowPolicy: return exit_code::kBoundOverflow;
    case Errc::SClassNoQuadruple: return exit_code::kSClass;
    case Errc::UncoveredClass: return exit_code::kUncovered;
    case Errc::InvalidArgument: return exit_code::kUsage;
    default: return exit_code::kLibraryError;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Output {
  std::ostream& out;
  bool pretty = false;
  bool timing = false;
  std::string command;
  Clock::time_point start = Clock::now();

  json envelope(std::string_view status) const {
    return json{{"status", status}, {"command", command}, {"tool_version", kToolVersion}};
  }

  void write(json env) const {
    if (timing) {
      env["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    out << (pretty ? env.dump(2) : env.dump()) << '\n';
  }

  void ok(json payload) const {
    json env = envelope("ok");
    env["payload"] = std::move(payload);
    write(std::move(env));
  }

  void error(std::string_view code, const std::string& message) const {
    json env = envelope("error");
    env["error"] = {{"code", code}, {"message", message}};
    write(std::move(env));
  }
};

// "re,im" or a bare rational integer.
RingElt parse_elt(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return RingElt(parse_int(text));
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

SolveOptions solve_options_from_env() {
  SolveOptions opts;
  if (const char* env = std::getenv("DNQ_BOUND_CEILING"); env && *env) {
    opts.bound_ceiling = parse_int(env);
    if (opts.bound_ceiling < 0) throw Error(Errc::InvalidArgument, "DNQ_BOUND_CEILING must be nonnegative");
  }
  return opts;
}

// Positional value, or the --name=value form, which is the safe way to pass negatives.
std::string pick(const std::optional<std::string>& positional, const std::optional<std::string>& option,
                 const char* what) {
  if (positional && option) throw Error(Errc::InvalidArgument, std::string(what) + " given twice");
  if (positional) return *positional;
  if (option) return *option;
  throw Error(Errc::InvalidArgument, std::string("missing ") + what);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine D(n)-quadruples in Z[sqrt(d)]", "dnq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  bool timing = false;
  app.add_flag("--pretty", pretty, "Indent output and render elements as a + b√d");
  app.add_flag("--timing", timing, "Add timing_ms to every record");

  std::string d_text;
  std::optional<std::string> n_re_pos, n_im_pos, n_re_opt, n_im_opt;

  auto* pell = app.add_subcommand("pell", "Solve x^2 - d y^2 = N");
  std::optional<std::string> target_pos, target_opt;
  std::size_t count = 0;
  pell->add_option("d", d_text)->required();
  pell->add_option("N", target_pos);
  pell->add_option("--target", target_opt, "N, for negative values: --target=-1");
  pell->add_option("--count", count, "Also list the first COUNT solutions with x, y >= 0");

  auto* classify = app.add_subcommand("classify", "Residue class of n modulo (4, 4)");
  classify->add_option("d", d_text)->required();
  classify->add_option("n_re", n_re_pos);
  classify->add_option("n_im", n_im_pos);
  classify->add_option("--n-re", n_re_opt);
  classify->add_option("--n-im", n_im_opt);

  auto* construct_cmd = app.add_subcommand("construct", "Build a D(n)-quadruple");
  std::size_t seed_index = 0;
  std::size_t retry_cap = ConstructOptions{}.retry_cap;
  construct_cmd->add_option("d", d_text)->required();
  construct_cmd->add_option("n_re", n_re_pos);
  construct_cmd->add_option("n_im", n_im_pos);
  construct_cmd->add_option("--n-re", n_re_opt);
  construct_cmd->add_option("--n-im", n_im_opt);
  construct_cmd->add_option("--seed-index", seed_index);
  construct_cmd->add_option("--retry-cap", retry_cap);

  auto* verify_cmd = app.add_subcommand("verify", "Check the D(n) property of four elements");
  std::vector<std::string> verify_args;
  verify_cmd->add_option("d", d_text)->required();
  verify_cmd->add_option("n_and_elements", verify_args, "n e1 e2 e3 e4, each as re,im")->expected(5)->required();

  auto* counter = app.add_subcommand("counterexample", "Quadruples for n that are not differences of squares");
  std::uint64_t max_x = 1000;
  std::size_t limit = 10;
  counter->add_option("d", d_text)->required();
  counter->add_option("--max-x", max_x, "Largest x = 2m+1 scanned")->capture_default_str();
  counter->add_option("--limit", limit, "Number of records")->capture_default_str();

  auto* hunt = app.add_subcommand("hunt-d", "Radicands with norm -1 and norm 6 elements");
  std::uint64_t lprime_max = 50;
  hunt->add_option("--lprime-max", lprime_max)->capture_default_str();

  auto* check = app.add_subcommand("check", "Solvability of norms -1, 6, -6");
  check->add_option("d", d_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  Output o{out, false, false, "", Clock::now()};
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    o.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    o.error("Usage", e.what());
    err << app.help();
    return exit_code::kUsage;
  }

  auto* sub = app.get_subcommands().front();
  o.command = sub->get_name();
  o.pretty = pretty;
  o.timing = timing;
  const JsonStyle style{pretty};

  try {
    const SolveOptions solve = solve_options_from_env();

    if (sub == hunt) {
      const HuntResult result = hunt_d(lprime_max);
      for (const std::string& a : result.anomalies) err << "anomaly: " << a << '\n';
      for (const DCandidate& c : result.candidates) o.ok(to_json(c, style));
      return exit_code::kOk;
    }

    const RingCtx ctx = make_ctx(parse_int(d_text));

    if (sub == pell) {
      const Int target = parse_int(pick(target_pos, target_opt, "N"));
      const PellSolutionSet set = solve_norm(ctx, target, solve);
      json payload = to_json(set, style);
      if (count > 0 && set.solvable) payload["enumerated"] = [&] {
        json arr = json::array();
        for (const RingElt& x : enumerate_norm(ctx, target, count, solve)) arr.push_back(to_json(x, style));
        return arr;
      }();
      o.ok(std::move(payload));
      return exit_code::kOk;
    }

    if (sub == classify || sub == construct_cmd) {
      const RingElt n{parse_int(pick(n_re_pos, n_re_opt, "n_re")), parse_int(pick(n_im_pos, n_im_opt, "n_im"))};
      if (sub == classify) {
        json payload{{"d", to_json(ctx.d())}, {"n", to_json(n, style)}};
        payload["class"] = to_json(classify_mod4(n));
        o.ok(std::move(payload));
        return exit_code::kOk;
      }
      const Quadruple q = construct(ctx, n, seed_index, ConstructOptions{retry_cap, solve});
      o.ok(to_json(q, style));
      return exit_code::kOk;
    }

    if (sub == verify_cmd) {
      const RingElt n = parse_elt(verify_args[0]);
      std::array<RingElt, 4> elements;
      for (std::size_t i = 0; i < 4; ++i) elements[i] = parse_elt(verify_args[i + 1]);
      const VerifyReport report = verify(ctx, n, elements);
      json payload{{"d", to_json(ctx.d())}, {"n", to_json(n, style)}};
      payload.update(to_json(report, style));
      o.ok(std::move(payload));
      return report.ok() ? exit_code::kOk : exit_code::kVerifyFailed;
    }

    if (sub == counter) {
      const ConstructOptions opts{ConstructOptions{}.retry_cap, solve};
      std::size_t emitted = 0;
      for (const PrimeWitness& w : prime_witness_search(ctx, max_x)) {
        if (emitted == limit) break;
        o.ok(to_json(make_counterexample(ctx, w.m, w.k, opts), style));
        ++emitted;
      }
      if (emitted < limit) err << "only " << emitted << " witnesses with x <= " << max_x << '\n';
      return exit_code::kOk;
    }

    if (sub == check) {
      o.ok(to_json(hypothesis_check(ctx, solve), style));
      return exit_code::kOk;
    }
  } catch (const Error& e) {
    o.error(errc_name(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return exit_code::kUsage;
}

}  // namespace dnq::cli
