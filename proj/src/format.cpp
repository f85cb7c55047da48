#include "weyl/format.hpp"

#include <sstream>

namespace weyl {

namespace {

void append_powers(std::string& out, char symbol, const MultiIndex& exps) {
  for (std::size_t i = 0; i < exps.dim(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol + std::to_string(i + 1);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
}

// `left_symbol` names the exponents held in TermKey::first.
std::string render(const TermMap& terms, char left_symbol, char right_symbol) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    append_powers(mono, left_symbol, k.first);
    append_powers(mono, right_symbol, k.second);
    Rational mag = c.abs();
    if (mono.empty()) {
      os << mag;
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string print_canonical(const WeylOp& p) { return render(p.terms(), 'x', 'd'); }

std::string print_right(const RightForm& r) { return render(r.terms(), 'd', 'x'); }

}  // namespace weyl
