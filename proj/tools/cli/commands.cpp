#include "commands.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "eval.hpp"
#include "jhall/oracle.hpp"
#include "render.hpp"

namespace jhall::cli {
namespace {

std::string source_line(const std::string& text, int line) {
  std::istringstream in(text);
  std::string s;
  for (int i = 1; i <= line && std::getline(in, s); ++i) {
  }
  return s;
}

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::string& input, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!input.empty()) {
      err << "  " << source_line(input, e.position().line) << "\n";
      err << "  " << std::string(static_cast<std::size_t>(e.position().column - 1), ' ') << "^\n";
    }
    if (!e.hint().empty()) err << "hint: " << e.hint() << "\n";
    return kUsageError;
  } catch (const TypeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DegreeBoundExceeded& e) {
    err << "error: " << e.what() << " (raise it with --degree-bound)\n";
    return kResourceCap;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

Format format_of(const Options& o, Format fallback) { return o.format.value_or(fallback); }

void emit(const Value& v, Format f, std::ostream& out) {
  if (f == Format::Text) {
    out << render_text(v) << "\n";
    return;
  }
  for (const auto& j : render_json(v)) out << j.dump() << "\n";
}

Value finish(Value v, const Options& o, const SymRing& ring) {
  if (o.basis) v = to_output_basis(v, parse_basis(*o.basis), ring);
  if (o.q) v = substitute_q(v, parse_rational(*o.q));
  return v;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text or json)");
}

int run_eval(const std::string& expression, const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, expression, [&] {
    if (options.basis) parse_basis(*options.basis);
    if (options.q) parse_rational(*options.q);
    const ExprPtr e = parse(expression);
    const Evaluator ev(options.degree_bound);
    emit(finish(ev.eval(*e), options, ev.ring()), format_of(options, Format::Text), out);
    return kSuccess;
  });
}

int run_check(const std::string& suite, std::optional<int> bound, const Options& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, {}, [&] {
    CheckOptions co;
    co.bound = bound;
    co.p = options.p;
    co.seed = options.seed;
    co.trials = options.trials;
    co.degree_bound = options.degree_bound;
    const CheckReport r = cli::run_check(suite, co);
    if (format_of(options, Format::Text) == Format::Json) {
      nlohmann::json j{{"suite", r.suite},       {"bound", r.bound},     {"cases", r.cases},
                       {"skipped", r.skipped},   {"passed", r.passed()}, {"failures", r.failures}};
      out << j.dump() << "\n";
    } else {
      out << r.summary() << "\n";
      for (const auto& f : r.failures) out << "  counterexample: " << f << "\n";
    }
    return r.passed() ? kSuccess : kVerificationFailure;
  });
}

int run_table(int weight, const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, {}, [&] {
    if (weight < 0) throw std::invalid_argument("table weight must be nonnegative");
    if (weight > kMaxTableWeight)
      throw oracle::BudgetExceeded("table weight is capped at " + std::to_string(kMaxTableWeight));
    const Format f = format_of(options, Format::Json);
    const SymRing ring(options.degree_bound);
    const auto objs = derived::root_objects_up_to(weight);
    for (const auto& a : objs)
      for (const auto& b : objs) {
        const Value v = finish(derived::derived_product(derived::natural(a.h0, a.h1), derived::natural(b.h0, b.h1)),
                               options, ring);
        if (f == Format::Text) {
          out << "u[" << a.to_string() << "] * u[" << b.to_string() << "] = " << render_text(v) << "\n";
          continue;
        }
        nlohmann::json j{
            {"x", {{"h0", partition_json(a.h0)}, {"h1", partition_json(a.h1)}}},
            {"y", {{"h0", partition_json(b.h0)}, {"h1", partition_json(b.h1)}}},
            {"terms", render_json(v)},
        };
        out << j.dump() << "\n";
      }
    return kSuccess;
  });
}

int run_export_hl(int degree, const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, {}, [&] {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const SymRing ring(options.degree_bound);
    const Format f = format_of(options, Format::Json);
    std::optional<mpq_class> t;
    if (options.q) {
      const mpq_class q = parse_rational(*options.q);
      if (q == 0) throw std::invalid_argument("--q must be nonzero for t = 1/q");
      t = 1 / q;
    }
    for (const auto& lambda : partitions_up_to(degree)) {
      const auto& row = ring.hl_P_in_t(lambda);
      std::vector<std::pair<Partition, Scalar>> entries(row.begin(), row.end());
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
      std::string text = "P[" + lambda.to_string() + "] =";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        Scalar c = entries[i].second;
        if (t) {
          const auto val = c.evaluate_v(*t);
          if (!val) throw EvalError("t = " + t->get_str() + " is a pole");
          c = Scalar::from_mpq(*val);
        }
        if (f == Format::Json) {
          nlohmann::json j{{"lambda", partition_json(lambda)}, {"mu", partition_json(entries[i].first)},
                           {"var", t ? "" : "t"}};
          const nlohmann::json s = scalar_json(c);
          j["num"] = s["num"];
          j["den"] = s["den"];
          if (t) j.erase("var");
          out << j.dump() << "\n";
          continue;
        }
        const std::string coeff = c.is_one() ? "" : "(" + c.to_string_in("t") + ")\xC2\xB7";
        text += std::string(i ? " + " : " ") + coeff + "m[" + entries[i].first.to_string() + "]";
      }
      if (f == Format::Text) out << text << "\n";
    }
    return kSuccess;
  });
}

}  // namespace jhall::cli
