#include "render.hpp"

#include <algorithm>
#include <functional>

namespace jhall::cli {
namespace {

const char* const kDot = "\xC2\xB7";
const char* const kTensor = "\xE2\x8A\x97";

std::string bracket(char letter, const Partition& p) { return std::string(1, letter) + "[" + p.to_string() + "]"; }

std::string derived_key(const RootObject& o, DerivedBasis basis) {
  if (basis == DerivedBasis::Natural || o.h0.empty() || o.h1.empty()) return "u[" + o.to_string() + "]";
  return "u[" + o.h0.to_string() + "]*u[;" + o.h1.to_string() + "]";
}

int weight_of(const Partition& p) { return p.weight(); }
int weight_of(const PartitionPair& p) { return p.first.weight() + p.second.weight(); }
int weight_of(const RootObject& o) { return o.total_weight(); }

struct Term {
  std::string key;
  Scalar coeff;
};

template <class Key>
std::vector<Term> ordered_terms(const LinComb<Key>& lc, const std::function<std::string(const Key&)>& key) {
  std::vector<std::pair<Key, Scalar>> items(lc.begin(), lc.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int wa = weight_of(a.first);
    const int wb = weight_of(b.first);
    if (wa != wb) return wa > wb;
    return b.first < a.first;
  });
  std::vector<Term> out;
  for (auto& [k, c] : items) out.push_back({key(k), c});
  return out;
}

bool negative_lead(const Scalar& s) { return !s.is_zero() && s.numerator().leading() < 0; }

std::string join(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Scalar c = terms[i].coeff;
    const bool neg = negative_lead(c);
    if (neg) c = -c;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!c.is_one()) out += c.to_coefficient_string() + kDot;
    out += terms[i].key;
  }
  return out;
}

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::json coefficients_json(const IntPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coefficients()) a.push_back(integer_json(c));
  return a;
}

template <class Key>
std::vector<nlohmann::json> records(const LinComb<Key>& lc, const std::function<void(nlohmann::json&, const Key&)>& key) {
  std::vector<std::pair<Key, Scalar>> items(lc.begin(), lc.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int wa = weight_of(a.first);
    const int wb = weight_of(b.first);
    if (wa != wb) return wa > wb;
    return b.first < a.first;
  });
  std::vector<nlohmann::json> out;
  for (const auto& [k, c] : items) {
    nlohmann::json j = nlohmann::json::object();
    key(j, k);
    const nlohmann::json s = scalar_json(c);
    j["num"] = s["num"];
    j["den"] = s["den"];
    out.push_back(std::move(j));
  }
  return out;
}

std::string basis_name(SymBasis b) { return std::string(1, basis_letter(b)); }

}  // namespace

OutputBasis parse_basis(const std::string& name) {
  if (name == "natural") return {DerivedBasis::Natural, std::nullopt};
  if (name == "normal") return {DerivedBasis::Normal, std::nullopt};
  if (name == "m") return {std::nullopt, SymBasis::Monomial};
  if (name == "e") return {std::nullopt, SymBasis::Elementary};
  if (name == "p") return {std::nullopt, SymBasis::Power};
  if (name == "P") return {std::nullopt, SymBasis::HallLittlewood};
  throw std::invalid_argument("unknown basis '" + name + "' (expected natural, normal, m, e, p or P)");
}

Value to_output_basis(const Value& v, const OutputBasis& basis, const SymRing& ring) {
  if (const auto* d = std::get_if<DerivedElem>(&v); d && basis.derived) return derived::to_basis(*d, *basis.derived);
  if (const auto* f = std::get_if<SymFunc>(&v); f && basis.sym) return ring.convert(*f, *basis.sym);
  if (const auto* t = std::get_if<TensorSymFunc>(&v); t && basis.sym) return ring.convert(*t, *basis.sym);
  return v;
}

std::string render_text(const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return s->to_string();
  if (const auto* h = std::get_if<HallElem>(&v))
    return join(ordered_terms<Partition>(*h, [](const Partition& p) { return bracket('u', p); }));
  if (const auto* t = std::get_if<TensorHallElem>(&v))
    return join(ordered_terms<PartitionPair>(
        *t, [](const PartitionPair& k) { return bracket('u', k.first) + kTensor + bracket('u', k.second); }));
  if (const auto* d = std::get_if<DerivedElem>(&v)) {
    const DerivedBasis b = d->basis;
    return join(ordered_terms<RootObject>(d->terms, [b](const RootObject& o) { return derived_key(o, b); }));
  }
  if (const auto* f = std::get_if<SymFunc>(&v)) {
    const char l = basis_letter(f->basis);
    return join(ordered_terms<Partition>(f->terms, [l](const Partition& p) { return bracket(l, p); }));
  }
  const auto& t = std::get<TensorSymFunc>(v);
  const char l = basis_letter(t.basis);
  return join(ordered_terms<PartitionPair>(
      t.terms, [l](const PartitionPair& k) { return bracket(l, k.first) + kTensor + bracket(l, k.second); }));
}

nlohmann::json scalar_json(const Scalar& s) {
  return {{"num", coefficients_json(s.numerator())}, {"den", coefficients_json(s.denominator())}};
}

nlohmann::json partition_json(const Partition& p) { return p.parts(); }

std::vector<nlohmann::json> render_json(const Value& v) {
  if (const auto* s = std::get_if<Scalar>(&v)) return {scalar_json(*s)};
  if (const auto* h = std::get_if<HallElem>(&v))
    return records<Partition>(*h, [](nlohmann::json& j, const Partition& p) { j["lambda"] = partition_json(p); });
  if (const auto* t = std::get_if<TensorHallElem>(&v))
    return records<PartitionPair>(*t, [](nlohmann::json& j, const PartitionPair& k) {
      j["left"] = partition_json(k.first);
      j["right"] = partition_json(k.second);
    });
  if (const auto* d = std::get_if<DerivedElem>(&v))
    return records<RootObject>(d->terms, [](nlohmann::json& j, const RootObject& o) {
      j["h0"] = partition_json(o.h0);
      j["h1"] = partition_json(o.h1);
    });
  if (const auto* f = std::get_if<SymFunc>(&v)) {
    const std::string b = basis_name(f->basis);
    return records<Partition>(f->terms, [&b](nlohmann::json& j, const Partition& p) {
      j["basis"] = b;
      j["lambda"] = partition_json(p);
    });
  }
  const auto& t = std::get<TensorSymFunc>(v);
  const std::string b = basis_name(t.basis);
  return records<PartitionPair>(t.terms, [&b](nlohmann::json& j, const PartitionPair& k) {
    j["basis"] = b;
    j["left"] = partition_json(k.first);
    j["right"] = partition_json(k.second);
  });
}

}  // namespace jhall::cli
