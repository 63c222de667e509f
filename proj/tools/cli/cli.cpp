#include "cli.hpp"

#include <chrono>
#include <exception>
#include <functional>

#include "generators.hpp"
#include "symtrace/errors.hpp"
#include "symtrace/fiber.hpp"
#include "symtrace/json_io.hpp"
#include "symtrace/random.hpp"
#include "symtrace/traceid.hpp"
#include "symtrace/version.hpp"

namespace symtrace::cli {

using nlohmann::json;

namespace {

struct Limits {
  std::size_t r1_max_m, r1_max_d, r1_max_N;
  std::vector<std::size_t> r2_degrees;
  std::size_t comm_max_N, comm_max_d;
  std::size_t instances, phi_samples, sum_samples, nil_samples;
};

Limits limits_for(Scale scale) {
  if (scale == Scale::small) return {2, 2, 4, {2, 4}, 4, 2, 10, 5, 10, 4};
  return {3, 3, 5, {2, 4, 6}, 6, 3, 50, 20, 30, 10};
}

class Collector {
 public:
  explicit Collector(RunReport& report) : report_(report) {}

  // Runs one case; the body returns whether it passed and may add fields.
  void run(const std::string& suite, json params, const std::function<bool(json&)>& body) {
    json record{{"suite", suite}, {"params", std::move(params)}};
    bool ok = false;
    try {
      ok = body(record);
    } catch (const std::exception& e) {
      record["error"] = e.what();
    }
    record["ok"] = ok;
    ++report_.cases_run;
    if (!ok) ++report_.failures;
    report_.details.push_back(std::move(record));
  }

 private:
  RunReport& report_;
};

std::string ordering_label(const std::vector<std::pair<bool, std::size_t>>& ordering) {
  std::string s;
  for (const auto& [is_mult, label] : ordering) s += (is_mult ? "M" : "I") + std::to_string(label);
  return s;
}

void trace_suites(Collector& out, Rng& rng, const Limits& lim, unsigned parallel) {
  TraceOptions options;
  options.parallel = parallel;
  for (std::size_t m = 1; m <= lim.r1_max_m; ++m) {
    for (const auto& ordering : gen::all_orderings(m)) {
      for (std::size_t d = 1; d <= lim.r1_max_d; ++d) {
        for (std::size_t N = 0; N <= lim.r1_max_N; ++N) {
          std::vector<SymTensor> v, w;
          for (std::size_t i = 0; i < m; ++i) {
            v.push_back(SymTensor::linear(rng.vector(d)));
            w.push_back(SymTensor::linear(rng.vector(d)));
          }
          const auto word = gen::word_from_ordering(ordering, 1, v, w);
          out.run("trace-r1", {{"word", ordering_label(ordering)}, {"d", d}, {"N", N}}, [&](json& rec) {
            const auto report = verify_trace_identity(word, N, d, options);
            rec["directTrace"] = json_io::encode(report.direct_trace);
            return report.match;
          });
        }
      }
    }
  }
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const auto& ordering : gen::all_orderings(m)) {
      for (std::size_t d = 1; d <= 2; ++d) {
        for (std::size_t N : lim.r2_degrees) {
          std::vector<SymTensor> v, w;
          for (std::size_t i = 0; i < m; ++i) {
            v.push_back(rng.sym_tensor(d, 2, 3, 2));
            w.push_back(rng.sym_tensor(d, 2, 3, 2));
          }
          const auto word = gen::word_from_ordering(ordering, 2, v, w);
          out.run("trace-r2", {{"word", ordering_label(ordering)}, {"d", d}, {"N", N}}, [&](json& rec) {
            const auto report = verify_trace_identity(word, N, d, options);
            rec["directTrace"] = json_io::encode(report.direct_trace);
            return report.match;
          });
        }
      }
    }
  }
}

void commutator_suite(Collector& out, Rng& rng, const Limits& lim) {
  for (std::size_t d = 1; d <= lim.comm_max_d; ++d) {
    for (std::size_t N = 0; N <= lim.comm_max_N; ++N) {
      const auto v = rng.vector(d), w = rng.vector(d);
      out.run("commutator", {{"d", d}, {"N", N}}, [&](json&) {
        const SymTensor sv = SymTensor::linear(v), sw = SymTensor::linear(w);
        const Matrix lhs = contract_op(sw, N + 1) * mult_op(sv, N + 1) - mult_op(sv, N) * contract_op(sw, N);
        const Matrix rhs = Matrix::identity(sym_dim(d, N)) * dot(w, v);
        return lhs == rhs;
      });
    }
  }
}

void macaulay_suite(Collector& out, Rng& rng) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t r = 1; r <= 2; ++r) {
      out.run("macaulay", {{"case", "full-basis"}, {"d", d}, {"r", r}}, [&](json&) {
        std::vector<SymTensor> full;
        for (const auto& alpha : monomials(d, r)) full.push_back(SymTensor::monomial(alpha));
        return only_zero_test(full, r, d);
      });
    }
  }
  for (unsigned r = 1; r <= 2; ++r) {
    out.run("macaulay", {{"case", "coordinate-powers"}, {"r", r}}, [&](json&) {
      const std::vector<SymTensor> b{SymTensor::monomial(MultiIndex{r, 0}), SymTensor::monomial(MultiIndex{0, r})};
      return only_zero_test(b, r, 2);
    });
  }
  out.run("macaulay", {{"case", "x^2"}}, [&](json&) {
    const std::vector<SymTensor> b{SymTensor::monomial(MultiIndex{2, 0})};
    return !only_zero_test(b, 2, 2);
  });
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t r = 1; r <= 2; ++r) {
      const auto v = rng.nonzero_vector(d);
      out.run("macaulay", {{"case", "single-power"}, {"d", d}, {"r", r}}, [&](json&) {
        const std::vector<SymTensor> b{power_embed(v, r)};
        return !only_zero_test(b, r, d);
      });
    }
  }
}

void certificate_suite(Collector& out, Rng& rng, const Limits& lim) {
  for (std::size_t k = 0; k < lim.instances; ++k) {
    const std::size_t dv = rng.integer(1, 2), dw = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto inst = gen::fiber_instance(rng, dv, dw, r, k % 3 == 0);
    out.run("certificate", {{"instance", k}, {"dimV", dv}, {"dimW", dw}, {"r", r}}, [&](json& rec) {
      const auto reduced_dim = reduce_to_bijective(inst).reduced.dim_v;
      const auto witness = product_witness(inst);
      const Certificate& c = witness.certificate;
      rec["certificate"] = json_io::encode(c);
      rec["reducedDim"] = reduced_dim;
      return sgn(c.value) != 0 && BigInt(c.m) <= nu_bound(r, reduced_dim) && witness.pairing == c.value;
    });
  }
}

void phi_suite(Collector& out, Rng& rng, const Limits& lim) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t r = 1; r <= 2; ++r) {
      for (std::size_t dv = 1; dv <= 2; ++dv) {
        for (std::size_t dw = 1; dw <= 2; ++dw) {
          for (std::size_t k = 0; k < lim.phi_samples; ++k) {
            Permutation sigma(n * r);
            for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
            rng.shuffle(sigma);
            std::vector<SymTensor> s, t;
            for (std::size_t i = 0; i < n; ++i) {
              s.push_back(rng.sym_tensor(dv, r, 3, 2));
              t.push_back(rng.sym_tensor(dw, r, 3, 2));
            }
            const Matrix u = gen::functional(rng, dv, dw, false);
            out.run("phi", {{"n", n}, {"r", r}, {"dimV", dv}, {"dimW", dw}, {"sigma", json_io::encode_permutation(sigma)}},
                    [&](json&) { return verify_phi_identity(sigma, s, t, u).match; });
          }
        }
      }
    }
  }
}

void nu_suite(Collector& out) {
  const std::vector<std::tuple<std::size_t, std::size_t, long>> known{{1, 1, 1}, {2, 1, 1}, {1, 2, 2520}};
  for (const auto& [r, d, value] : known) {
    out.run("nu", {{"r", r}, {"d", d}}, [&](json&) { return nu_bound(r, d) == value; });
  }
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t d = 1; d <= 2; ++d) {
      out.run("nu", {{"r", r}, {"d", d}, {"case", "definition"}}, [&](json&) {
        const BigInt dim = sym_dim(d, r * d);
        return nu_bound(r, d) == lcm_upto(dim * dim);
      });
    }
  }
}

void graph_suite(Collector& out) {
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> counts{{2, 1, 2}, {2, 2, 3}, {3, 1, 6}};
  for (const auto& [m, r, count] : counts) {
    out.run("graphs", {{"m", m}, {"r", r}, {"case", "count"}},
            [&](json&) { return enumerate_graphs(m, r).size() == count; });
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t r = 1; r <= 2; ++r) {
      out.run("graphs", {{"m", m}, {"r", r}, {"case", "expansion"}}, [&](json&) {
        BigInt full = 1;
        for (std::size_t k = 0; k < 2 * m; ++k) full *= factorial(r);
        for (const auto& g : enumerate_graphs(m, r)) {
          const auto ex = expand_graph(g);
          if (ex.symmetry_count * automorphism_order(g) != full) return false;
          if (collapse_matching(ex.matching, r) != g) return false;
          if (perm_to_graph(graph_to_perm(g), m, r) != g) return false;
        }
        return true;
      });
    }
  }
}

void sum_suite(Collector& out, Rng& rng, const Limits& lim) {
  for (std::size_t k = 0; k < lim.sum_samples; ++k) {
    const std::size_t dv = rng.integer(1, 2), dw = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto a = gen::only_zero_forms(rng, dv, r);
    const auto b = gen::only_zero_forms(rng, dw, r);
    const auto uv = rng.nonzero_vector(dv);
    const auto uw = rng.vector(dw);
    out.run("sum-witness", {{"sample", k}, {"dimV", dv}, {"dimW", dw}, {"r", r}}, [&](json& rec) {
      const auto w = direct_sum_witness(a, b, uv, uw, r);
      rec["pairing"] = json_io::encode(w.pairing);
      return sgn(w.pairing) != 0;
    });
  }
}

void nil_suite(Collector& out, Rng& rng, const Limits& lim) {
  for (std::size_t k = 0; k < lim.nil_samples; ++k) {
    const std::size_t d = rng.integer(1, 2), r = rng.integer(1, 2);
    const auto a = gen::only_zero_forms(rng, d, r);
    const auto b = gen::only_zero_forms(rng, d, r);
    out.run("nil-link", {{"sample", k}, {"d", d}, {"r", r}}, [&](json&) {
      const std::size_t N = r * d;
      std::vector<Matrix> generators;
      for (const auto& x : a)
        for (const auto& y : b) generators.push_back(mult_op(x, N) * contract_op(y, N));
      return !is_nil(generators);
    });
  }
}

template <class F>
RunReport timed(RunReport report, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::size_t get_size(const json& input, const char* key) {
  if (!input.contains(key) || !input[key].is_number_unsigned()) {
    throw InvalidInput(std::string("missing or invalid non-negative integer field \"") + key + "\"");
  }
  return input[key].get<std::size_t>();
}

}  // namespace

Scale parse_scale(const std::string& name) {
  if (name == "small") return Scale::small;
  if (name == "standard") return Scale::standard;
  throw InvalidInput("unknown scale \"" + name + "\" (expected small or standard)");
}

json to_json(const RunReport& report, bool timing) {
  json j{{"command", report.command},
         {"seed", report.seed},
         {"casesRun", report.cases_run},
         {"failures", report.failures},
         {"version", kVersion},
         {"details", report.details}};
  if (!report.instance_hash.empty()) j["instanceHash"] = report.instance_hash;
  if (timing) j["elapsedMs"] = report.elapsed_ms;
  return j;
}

int exit_code(const RunReport& report) { return report.failures == 0 ? 0 : 1; }

RunReport run_selftest(std::uint64_t seed, Scale scale, unsigned parallel) {
  RunReport base;
  base.command = "selftest";
  base.seed = seed;
  return timed(std::move(base), [&](RunReport& report) {
    const Limits lim = limits_for(scale);
    Rng rng(seed);
    Collector out(report);
    trace_suites(out, rng, lim, parallel);
    commutator_suite(out, rng, lim);
    macaulay_suite(out, rng);
    certificate_suite(out, rng, lim);
    phi_suite(out, rng, lim);
    nu_suite(out);
    graph_suite(out);
    sum_suite(out, rng, lim);
    nil_suite(out, rng, lim);
  });
}

RunReport run_instance(const std::string& command, const json& input, unsigned parallel) {
  if (!input.is_object()) throw InvalidInput("input must be a JSON object");
  RunReport base;
  base.command = command;
  base.instance_hash = json_io::content_hash(input);
  return timed(std::move(base), [&](RunReport& report) {
    json detail;
    bool ok = true;
    if (command == "verify-trace") {
      if (!input.contains("word")) throw InvalidInput("missing field \"word\"");
      const OperatorWord word = json_io::decode_word(input["word"]);
      const std::size_t N = get_size(input, "N");
      const std::size_t dim = input.contains("dim") ? get_size(input, "dim") : word.dim();
      TraceOptions options;
      options.parallel = parallel;
      if (input.contains("coefficientOverrides")) {
        const json& list = input["coefficientOverrides"];
        if (!list.is_array()) throw InvalidInput("\"coefficientOverrides\" must be an array");
        for (const auto& item : list) {
          if (!item.is_object()) throw InvalidInput("coefficient override must be an object");
          options.coefficient_overrides[get_size(item, "graph")] = json_io::decode_rational(item.at("c"));
        }
      }
      const auto trace = verify_trace_identity(word, N, dim, options);
      detail = json_io::encode(trace);
      ok = trace.match;
    } else if (command == "certify") {
      const FiberInstance inst = json_io::decode_instance(input);
      const auto search = search_certificate(inst);
      const auto witness = product_witness(inst);
      const BigInt nu = nu_bound(inst.r, search.reduction.reduced.dim_v);
      detail = {{"certificate", json_io::encode(witness.certificate)},
                {"degree", search.N},
                {"wordsExamined", search.words_examined},
                {"wordTrace", json_io::encode(search.word_trace)},
                {"reducedDims", {search.reduction.reduced.dim_v, search.reduction.reduced.dim_w}},
                {"nuBound", nu.get_str()},
                {"sigma", json_io::encode_permutation(witness.sigma)},
                {"pairing", json_io::encode(witness.pairing)}};
      ok = BigInt(witness.certificate.m) <= nu && witness.pairing == witness.certificate.value;
    } else if (command == "check-zeros") {
      const std::size_t d = get_size(input, "dim"), r = get_size(input, "r");
      if (!input.contains("B") || !input["B"].is_array()) throw InvalidInput("missing array field \"B\"");
      std::vector<SymTensor> forms;
      for (const auto& t : input["B"]) forms.push_back(json_io::decode_sym_tensor(t));
      const bool only_zero = only_zero_test(forms, r, d);
      detail = {{"onlyZero", only_zero},
                {"degree", r * d},
                {"macaulayRank", rank(macaulay_matrix(forms, r * d))},
                {"target", sym_dim(d, r * d)}};
    } else if (command == "nu") {
      const std::size_t r = get_size(input, "r"), d = get_size(input, "d");
      if (r == 0 || d == 0) throw InvalidInput("nu: r and d must be positive");
      const BigInt D = BigInt(sym_dim(d, r * d)) * sym_dim(d, r * d);
      detail = {{"r", r}, {"d", d}, {"D", D.get_str()}, {"nu", nu_bound(r, d).get_str()}};
    } else if (command == "phi-check") {
      if (!input.contains("sigma") || !input.contains("S") || !input.contains("T") || !input.contains("u")) {
        throw InvalidInput("phi-check needs \"sigma\", \"S\", \"T\" and \"u\"");
      }
      const Permutation sigma = json_io::decode_permutation(input["sigma"]);
      std::vector<SymTensor> s, t;
      for (const auto& x : input["S"]) s.push_back(json_io::decode_sym_tensor(x));
      for (const auto& x : input["T"]) t.push_back(json_io::decode_sym_tensor(x));
      const auto check = verify_phi_identity(sigma, s, t, json_io::decode_matrix(input["u"]));
      detail = json_io::encode(check);
      ok = check.match;
    } else {
      throw InvalidInput("unknown command \"" + command + "\"");
    }
    report.cases_run = 1;
    report.failures = ok ? 0 : 1;
    report.details.push_back(std::move(detail));
  });
}

}  // namespace symtrace::cli
