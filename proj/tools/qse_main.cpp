// Command line front end. Every subcommand is a thin adapter over the core
// library: load inputs, call one operation, print its result. Exit codes:
// 0 success, 2 usage error, 3 input format error, 4 parameter domain error,
// 1 anything else. QSE_SEED provides the default seed; --seed overrides.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qse/amplitude_estimation.hpp"
#include "qse/error.hpp"
#include "qse/ghd.hpp"
#include "qse/rng.hpp"
#include "qse/stream.hpp"
#include "qse/streaming_estimator.hpp"
#include "qse/suffix_estimator.hpp"
#include "qse/tables.hpp"
#include "qse/two_stage.hpp"

namespace {

qse::StreamFormat to_format(const std::string& name) {
  return name == "binary" ? qse::StreamFormat::binary : qse::StreamFormat::text;
}

const char* class_name(qse::GhdClass c) {
  switch (c) {
    case qse::GhdClass::near: return "near";
    case qse::GhdClass::far: return "far";
    case qse::GhdClass::unpromised: return "unpromised";
  }
  return "?";
}

nlohmann::ordered_json classical_record(const qse::Stream& s,
                                        const qse::EstimateReport& r,
                                        std::uint64_t k, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["estimate"] = r.estimate;
  j["method"] = "classical_mc";
  j["m"] = s.size();
  j["n"] = s.n;
  j["k"] = k;
  j["seed"] = seed;
  j["passes"] = r.ledger.passes;
  j["classical_bits"] = r.ledger.classical_bits;
  return j;
}

struct EstimateArgs {
  std::string in;
  std::string method;
  double epsilon = 0.1;
  double delta = 0.2;
  std::uint64_t seed = 0;
  std::uint64_t k = 0;  // 0: size classically from the accuracy target
  std::uint64_t trials = 0;
};

void run_estimate(const EstimateArgs& a) {
  qse::Stream s = qse::load_stream(a.in);
  bool quantum = a.method == "quantum";
  std::uint64_t k = a.k;
  if (!quantum && k == 0)
    k = qse::classical_mc_samples(a.epsilon, a.delta, s.size());

  auto one = [&](std::uint64_t seed) -> std::pair<double, nlohmann::ordered_json> {
    if (quantum) {
      qse::TwoStageReport rep = qse::run_two_stage(s, a.epsilon, a.delta, seed);
      return {rep.estimate,
              nlohmann::ordered_json::parse(qse::to_json_string(rep))};
    }
    qse::EstimateReport rep = qse::classical_mc_estimate(s, k, seed);
    return {rep.estimate, classical_record(s, rep, k, seed)};
  };

  if (a.trials == 0) {
    std::printf("%s\n", one(a.seed).second.dump().c_str());
    return;
  }

  double h = qse::exact_entropy(s);
  std::uint64_t successes = 0;
  for (std::uint64_t i = 0; i < a.trials; ++i) {
    auto [estimate, record] = one(qse::derive_seed(a.seed, i));
    record["trial"] = i;
    bool ok = h == 0.0 ? estimate == 0.0
                       : std::abs(estimate - h) <= a.epsilon * h;
    if (ok) ++successes;
    record["within_epsilon"] = ok;
    std::printf("%s\n", record.dump().c_str());
  }
  nlohmann::ordered_json summary;
  summary["trials"] = a.trials;
  summary["method"] = quantum ? "quantum" : "classical_mc";
  summary["h_exact"] = h;
  summary["epsilon"] = a.epsilon;
  summary["delta"] = a.delta;
  summary["successes"] = successes;
  summary["success_rate"] = double(successes) / double(a.trials);
  summary["target_rate"] = 1.0 - a.delta;
  std::printf("%s\n", summary.dump().c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming Shannon entropy laboratory"};
  app.require_subcommand(1);

  // --- gen -------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a stream file");
  std::string gen_kind, gen_out, gen_format = "text";
  qse::GeneratorParams gp;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "uniform|zipf|majority|ghd")
      ->required()
      ->check(CLI::IsMember({"uniform", "zipf", "majority", "ghd"}));
  gen->add_option("--m", gp.m, "stream length");
  gen->add_option("--n", gp.n, "alphabet size");
  gen->add_option("--zipf-exponent", gp.zipf_exponent, "zipf weight exponent");
  gen->add_option("--majority-fraction", gp.majority_fraction,
                  "planted majority fraction");
  gen->add_option("--ghd-x", gp.ghd_x, "bit string for the first party");
  gen->add_option("--ghd-y", gp.ghd_y, "bit string for the second party");
  gen->add_option("--seed", gen_seed, "generator seed")->envname("QSE_SEED");
  gen->add_option("--out", gen_out, "output path")->required();
  gen->add_option("--format", gen_format, "text|binary")
      ->check(CLI::IsMember({"text", "binary"}));
  gen->callback([&] {
    qse::StreamKind kind = gen_kind == "uniform"  ? qse::StreamKind::uniform
                           : gen_kind == "zipf"   ? qse::StreamKind::zipf
                           : gen_kind == "majority" ? qse::StreamKind::majority
                                                    : qse::StreamKind::ghd;
    qse::Stream s = qse::generate_stream(kind, gp, gen_seed);
    qse::save_stream(s, gen_out, to_format(gen_format));
  });

  // --- entropy ---------------------------------------------------------
  auto* entropy = app.add_subcommand("entropy", "exact plug-in entropy of a stream");
  std::string entropy_in;
  entropy->add_option("--in", entropy_in, "stream file")->required();
  entropy->callback([&] {
    std::printf("%.15g\n", qse::exact_entropy(qse::load_stream(entropy_in)));
  });

  // --- estimate --------------------------------------------------------
  auto* estimate = app.add_subcommand(
      "estimate", "entropy estimate with accuracy/confidence targets");
  EstimateArgs ea;
  estimate->add_option("--in", ea.in, "stream file")->required();
  estimate->add_option("--method", ea.method, "classical|quantum")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum"}));
  estimate->add_option("--epsilon", ea.epsilon, "relative accuracy");
  estimate->add_option("--delta", ea.delta, "failure probability");
  estimate->add_option("--seed", ea.seed, "run seed")->envname("QSE_SEED");
  estimate->add_option("--k", ea.k, "classical sample count override");
  estimate->add_option("--trials", ea.trials,
                       "batch size; emits one record per trial plus a summary");
  estimate->callback([&] { run_estimate(ea); });

  // --- ghd -------------------------------------------------------------
  auto* ghd = app.add_subcommand("ghd", "two-party gap-Hamming experiments");
  ghd->require_subcommand(1);

  auto* encode = ghd->add_subcommand("encode", "encode an instance as a stream");
  std::string enc_x, enc_y, enc_in, enc_out, enc_format = "text";
  encode->add_option("--x", enc_x, "first bit string");
  encode->add_option("--y", enc_y, "second bit string");
  encode->add_option("--in", enc_in, "instance file (two lines of bits)");
  encode->add_option("--out", enc_out, "output stream path")->required();
  encode->add_option("--format", enc_format, "text|binary")
      ->check(CLI::IsMember({"text", "binary"}));
  encode->callback([&] {
    qse::GhdInstance g = enc_in.empty()
                             ? qse::make_ghd_instance(enc_x, enc_y)
                             : qse::load_ghd_instance(enc_in);
    qse::save_stream(qse::encode_streams(g), enc_out, to_format(enc_format));
  });

  auto* run = ghd->add_subcommand("run", "run the protocol on an instance");
  std::string run_in, run_estimator = "exact";
  std::uint64_t run_passes = 1, run_budget = std::uint64_t{1} << 20;
  std::uint64_t run_k = 1024, run_seed = 0;
  run->add_option("--in", run_in, "instance file")->required();
  run->add_option("--passes", run_passes, "stream passes T (2T-1 rounds)");
  run->add_option("--budget", run_budget, "per-message bit budget S");
  run->add_option("--estimator", run_estimator, "exact|mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  run->add_option("--k", run_k, "sample slots for the mc estimator");
  run->add_option("--seed", run_seed, "mc estimator seed")->envname("QSE_SEED");
  run->callback([&] {
    qse::GhdInstance g = qse::load_ghd_instance(run_in);
    qse::ProtocolTranscript t;
    if (run_estimator == "exact") {
      qse::ExactEntropyEstimator est;
      t = qse::simulate_protocol(g, est, run_passes, run_budget);
    } else {
      qse::McStreamingEstimator est(run_k, run_seed);
      t = qse::simulate_protocol(g, est, run_passes, run_budget);
    }
    std::uint64_t total = 0, largest = 0;
    for (const auto& msg : t.messages) {
      total += msg.bits;
      largest = std::max(largest, msg.bits);
    }
    nlohmann::ordered_json j;
    j["m"] = g.m();
    j["d"] = g.hamming_distance();
    j["promise"] = class_name(qse::classify_instance(g));
    j["passes"] = t.passes;
    j["rounds"] = t.rounds;
    j["budget_bits"] = t.memory_bits;
    j["estimate"] = t.estimate;
    j["answer"] = qse::decision_name(t.answer);
    j["total_message_bits"] = total;
    j["max_message_bits"] = largest;
    j["budget_violation"] = t.budget_violation;
    std::printf("%s\n", j.dump().c_str());
  });

  // --- resources -------------------------------------------------------
  auto* resources = app.add_subcommand(
      "resources", "pass/qubit/bit ledgers over an accuracy grid (CSV)");
  std::string res_in, res_case = "no_majority";
  std::vector<double> res_epsilons{0.4, 0.2, 0.1, 0.05};
  double res_delta = 0.2;
  std::uint64_t res_m = 0, res_trials = 50, res_seed = 1;
  std::uint32_t res_n = 0;
  bool res_empirical = false;
  resources->add_option("--in", res_in,
                        "stream file: emit the classical-vs-quantum table");
  resources->add_option("--m", res_m, "stream length for prediction");
  resources->add_option("--n", res_n, "alphabet size for prediction");
  resources->add_option("--epsilons", res_epsilons, "accuracy grid")
      ->delimiter(',');
  resources->add_option("--delta", res_delta, "failure probability");
  resources->add_option("--case", res_case,
                        "no_majority|majority|degenerate for prediction")
      ->check(CLI::IsMember({"no_majority", "majority", "degenerate"}));
  resources->add_flag("--empirical", res_empirical,
                      "calibrate classical k by trial runs instead of bounds");
  resources->add_option("--trials", res_trials, "calibration trials per k");
  resources->add_option("--seed", res_seed, "calibration seed")->envname("QSE_SEED");
  resources->callback([&] {
    if (!res_in.empty()) {
      qse::Stream s = qse::load_stream(res_in);
      qse::ContrastConfig cfg;
      cfg.epsilons = res_epsilons;
      cfg.delta = res_delta;
      cfg.empirical = res_empirical;
      cfg.trials = res_trials;
      cfg.seed = res_seed;
      std::printf("%s", qse::contrast_csv(qse::classical_quantum_contrast(s, cfg)).c_str());
      return;
    }
    if (res_m == 0 || res_n == 0)
      throw qse::DomainError("prediction needs --m and --n (or --in)");
    qse::CaseTaken c = res_case == "majority" ? qse::CaseTaken::majority
                       : res_case == "degenerate"
                           ? qse::CaseTaken::degenerate_single_symbol
                           : qse::CaseTaken::no_majority;
    std::printf(
        "epsilon,passes,asymptotic_passes,qubit_budget,a_executions,"
        "classical_bits\n");
    for (double eps : res_epsilons) {
      qse::ResourceLedger led =
          qse::predict_resources(res_m, res_n, eps, res_delta, c);
      std::printf("%g,%llu,%g,%llu,%llu,%llu\n", eps,
                  static_cast<unsigned long long>(led.passes),
                  led.asymptotic_passes,
                  static_cast<unsigned long long>(led.qubit_budget),
                  static_cast<unsigned long long>(led.a_executions),
                  static_cast<unsigned long long>(led.classical_bits));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const qse::ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 3;
  } catch (const qse::DomainError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
