#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mixdisc/harness.hpp"
#include "mixdisc/json_io.hpp"

namespace mixdisc::cli {

namespace {

constexpr const char* kVersion = "star-operator, D(I..I)=n!";

struct Options {
  std::string input;
  bool pretty = false;
  bool version = false;
  std::string mode;
  std::size_t counterexample_n = 0;
  std::string suite;
  GeneratorConfig fuzz;
  bool per_trial = false;
  bool timing = false;
};

// Result of one subcommand before it is wrapped in the envelope.
struct Reply {
  json result;
  int exit_code = kOk;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

  const json& body() {
    if (!body_) body_ = parse_body();
    return *body_;
  }

 private:
  json parse_body() {
    std::string text;
    if (!opts_.input.empty()) {
      std::ifstream file(opts_.input);
      if (!file) throw InputError("input_file", "cannot open '" + opts_.input + "'");
      text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError("json_syntax", e.what());
    }
  }

  const Options& opts_;
  std::istream& in_;
  std::optional<json> body_;
};

// Dimension of the problem: the "n" field when present, else the size of a
// reference matrix.
std::size_t dimension(const json& body, std::size_t inferred) {
  if (!body.contains("n")) return inferred;
  const json& n = body.at("n");
  if (!n.is_number_unsigned()) throw InputError("dimension", "'n' must be a positive integer");
  if (n.get<std::size_t>() != inferred) throw InputError("dimension", "'n' does not match the matrix dimension");
  return inferred;
}

// A missing "omega" means n−2 copies of the identity.
OmegaTuple omega_of(const json& body, std::size_t n) {
  if (!body.contains("omega")) return OmegaTuple::repeated(HermitianMatrix::identity(n));
  return omega_from_json(body.at("omega"), n);
}

json vectors_to_json(const std::vector<RationalVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Reply cmd_gram(Session& s) {
  const json& body = s.body();
  const json& n_field = require(body, "n");
  if (!n_field.is_number_unsigned()) throw InputError("dimension", "'n' must be a positive integer");
  const OmegaTuple omega = omega_of(body, n_field.get<std::size_t>());
  const GramMatrix g = gram(omega);
  return {json{{"n", g.n},
               {"dimension", g.entries.rows()},
               {"entries", matrix_to_json(g.entries)},
               {"signature", signature(g.entries)}}};
}

Reply cmd_primitive(Session& s) {
  const json& body = s.body();
  const HermitianMatrix eta = hermitian_from_json(require(body, "eta"));
  const OmegaTuple omega = omega_of(body, dimension(body, eta.dim()));
  const GramMatrix g = gram(omega);
  const FunctionalVec f = functional(g, eta);
  const PrimitiveSubspace sub = primitive_space(f);
  return {json{{"functional", f},
               {"dimension", sub.dim()},
               {"basis", vectors_to_json(sub.basis_vectors)},
               {"signature", signature_on(g, sub)}}};
}

Reply cmd_hodge_index(Session& s) {
  const json& body = s.body();
  const HermitianMatrix eta = hermitian_from_json(require(body, "eta"));
  const OmegaTuple omega = omega_of(body, dimension(body, eta.dim()));
  return {hodge_index_check(omega, eta)};
}

Reply cmd_lefschetz(Session& s) {
  const json& body = s.body();
  const HermitianMatrix eta = hermitian_from_json(require(body, "eta"));
  const HermitianMatrix beta = hermitian_from_json(require(body, "beta"));
  const OmegaTuple omega = omega_of(body, dimension(body, eta.dim()));
  return {lefschetz(omega, eta, beta)};
}

Reply cmd_psd_check(Session& s) {
  const json& body = s.body();
  const HermitianMatrix m = hermitian_from_json(body.contains("matrix") ? body.at("matrix") : body);
  json r = is_psd(m);
  r["matrix"] = m;
  return {std::move(r)};
}

Reply cmd_cone_check(Session& s) { return {cone_gamma_membership(cone_query_from_json(s.body()))}; }

Reply cmd_alexandrov(Session& s) {
  const json& body = s.body();
  const HermitianMatrix a = hermitian_from_json(require(body, "a"));
  const HermitianMatrix b = hermitian_from_json(require(body, "b"));
  const OmegaTuple omega = omega_of(body, dimension(body, a.dim()));
  const AlexandrovResult r = alexandrov_verify(omega, a, b);
  return {r, r.holds ? kOk : kViolation};
}

Reply cmd_classify(Session& s, const std::string& mode_flag) {
  const json& body = s.body();
  const HermitianMatrix a = hermitian_from_json(require(body, "a"));
  const HermitianMatrix b = hermitian_from_json(require(body, "b"));
  const OmegaTuple omega = omega_of(body, dimension(body, a.dim()));
  Mode mode = Mode::Unchecked;
  if (!mode_flag.empty())
    mode = parse_mode(mode_flag);
  else if (body.contains("mode"))
    mode = parse_mode(body.at("mode").get<std::string>());
  const Verdict v = classify_equality({omega, a, b, mode});
  json r = v;
  r["mode"] = to_string(mode);
  return {std::move(r), v.tag == VerdictTag::TheoremViolation ? kViolation : kOk};
}

Reply cmd_kt_verify(Session& s) {
  const json& body = s.body();
  const HermitianMatrix alpha = hermitian_from_json(require(body, "alpha"));
  const HermitianMatrix beta = hermitian_from_json(require(body, "beta"));
  dimension(body, alpha.dim());
  const auto prefix = multiplicities_from_json(body.contains("prefix") ? body.at("prefix") : json::array());
  const KtReport r = kt_torus_verify(prefix, alpha, beta);
  return {r, r.verdict.tag == VerdictTag::TheoremViolation ? kViolation : kOk};
}

Reply cmd_sk_chain(Session& s) {
  const json& body = s.body();
  const HermitianMatrix alpha = hermitian_from_json(require(body, "alpha"));
  const HermitianMatrix beta = hermitian_from_json(require(body, "beta"));
  dimension(body, alpha.dim());
  const SequenceReport r = sk_chain(alpha, beta);
  return {r, r.violation ? kViolation : kOk};
}

Reply cmd_counterexample(std::size_t n) {
  if (n < 2) throw InputError("dimension", "counterexample needs --n >= 2");
  const Counterexample c = counterexample_generate(n);
  return {c, c.verdict.tag == VerdictTag::TheoremViolation ? kViolation : kOk};
}

Reply cmd_fuzz(const Options& opts) {
  const SuiteReport r = run_suite(opts.suite, opts.fuzz);
  return {r.to_json(opts.per_trial, opts.timing), r.violations == 0 ? kOk : kViolation};
}

std::string dump(const json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

Outcome error_outcome(const std::string& kind, const std::string& invariant, const std::string& message,
                      bool pretty) {
  json err{{"kind", kind}, {"invariant", invariant}, {"message", message}};
  return {dump(json{{"ok", false}, {"error", std::move(err)}}, pretty), kInputError};
}

}  // namespace

Outcome dispatch(const std::vector<std::string>& args, std::istream& in) {
  Options opts;
  CLI::App app{"Exact mixed discriminants, Hodge-index checks and Alexandrov/Khovanskii-Teissier verdicts",
               "mixdisc"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("--input,-i", opts.input, "Read the JSON request from this file instead of stdin");
  app.add_flag("--pretty", opts.pretty, "Indent JSON output");
  app.add_flag("--version", opts.version, "Print the D normalization convention and exit");

  using Handler = std::function<Reply(Session&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  CLI::App* mixed = app.add_subcommand("mixed-disc", "D(A_1..A_n) of {\"n\",\"matrices\"} or {\"prefix\"}");
  add("gram", "Gram matrix of Q = D(Omega,.,.) from {\"n\",\"omega\"}", cmd_gram);
  add("primitive", "Primitive space of (Omega, eta)", cmd_primitive);
  add("hodge-index", "Hodge index check for (Omega, eta)", cmd_hodge_index);
  add("lefschetz", "Split beta = c*eta + gamma", cmd_lefschetz);
  add("psd-check", "Exact PSD test with certificate", cmd_psd_check);
  add("cone-check", "m-positivity and cone membership", cmd_cone_check);
  add("alexandrov", "D(Omega,a,b)^2 >= D(Omega,a,a) D(Omega,b,b)", cmd_alexandrov);
  CLI::App* classify = add("classify", "Equality-case classifier", [&](Session& s) { return cmd_classify(s, opts.mode); });
  classify->add_option("--mode", opts.mode, "b1 | b2 | unchecked (overrides the request's \"mode\")");
  add("kt-verify", "Khovanskii-Teissier check on the flat torus", cmd_kt_verify);
  add("sk-chain", "s_k = D(alpha x k, beta x (n-k)) and its equality chain", cmd_sk_chain);
  CLI::App* cx = add("counterexample", "Equality with non-proportional functionals outside the hypotheses",
                     [&](Session&) { return cmd_counterexample(opts.counterexample_n); });
  cx->add_option("--n", opts.counterexample_n, "Dimension (>= 2)")->required();
  CLI::App* fuzz = add("fuzz", "Seeded property suite", [&](Session&) { return cmd_fuzz(opts); });
  fuzz->add_option("--suite", opts.suite, "Suite name")->required();
  fuzz->add_option("--n", opts.fuzz.n, "Dimension")->capture_default_str();
  fuzz->add_option("--trials", opts.fuzz.trials, "Number of trials")->capture_default_str();
  fuzz->add_option("--seed", opts.fuzz.seed, "64-bit seed")->capture_default_str();
  fuzz->add_option("--rank-profile", opts.fuzz.rank_profile, "Target PSD ranks, cycled")->delimiter(',');
  fuzz->add_option("--entry-bound", opts.fuzz.entry_bound, "Bound on sampled numerators/denominators")
      ->capture_default_str();
  fuzz->add_flag("--per-trial", opts.per_trial, "Include one record per trial");
  fuzz->add_flag("--timing", opts.timing, "Include elapsed times (breaks byte-identical output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {app.help(), kOk};
  } catch (const CLI::CallForAllHelp&) {
    return {app.help("", CLI::AppFormatMode::All), kOk};
  } catch (const CLI::ParseError& e) {
    return error_outcome("usage", "usage", e.what(), opts.pretty);
  }

  if (opts.version) return {std::string(kVersion) + "\n", kOk};
  if (app.get_subcommands().empty()) return error_outcome("usage", "usage", "a subcommand is required", opts.pretty);

  Session session(opts, in);
  try {
    if (mixed->parsed()) {
      const json& body = session.body();
      const Rational d = body.contains("prefix") ? mixed_disc_multi(multiplicities_from_json(body.at("prefix")))
                                                 : mixed_disc(tuple_from_json(body));
      return {d.str() + "\n", kOk};
    }
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Reply r = handler(session);
      return {dump(json{{"ok", true}, {"result", std::move(r.result)}}, opts.pretty), r.exit_code};
    }
  } catch (const InputError& e) {
    return error_outcome("input", e.invariant(), e.what(), opts.pretty);
  } catch (const PreconditionError& e) {
    return error_outcome("precondition", e.condition(), e.what(), opts.pretty);
  } catch (const json::exception& e) {
    return error_outcome("input", "json_type", e.what(), opts.pretty);
  }
  return error_outcome("usage", "usage", "unknown subcommand", opts.pretty);
}

}  // namespace mixdisc::cli
