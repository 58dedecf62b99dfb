#include "sclif/blade.hpp"

#include <algorithm>

namespace sclif {

Signature::Signature(std::vector<int> squares, Field field) : squares_(std::move(squares)), field_(field) {
  if (squares_.size() > static_cast<std::size_t>(kMaxGenerators))
    throw Error(Errc::TooLarge, "at most " + std::to_string(kMaxGenerators) + " generators");
  for (int s : squares_) {
    if (s < -1 || s > 1) throw Error(Errc::InvalidArgument, "generator squares must be +1, -1 or 0");
    if (field_ == Field::Complex && s == -1)
      throw Error(Errc::InvalidArgument, "complex signatures have no -1 squares");
  }
}

Signature Signature::real(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  if (p + q + r > kMaxGenerators) throw Error(Errc::TooLarge, "p+q+r exceeds " + std::to_string(kMaxGenerators));
  std::vector<int> s;
  s.insert(s.end(), static_cast<std::size_t>(p), 1);
  s.insert(s.end(), static_cast<std::size_t>(q), -1);
  s.insert(s.end(), static_cast<std::size_t>(r), 0);
  return Signature(std::move(s), Field::Real);
}

Signature Signature::complex(int p, int q) {
  if (p < 0 || q < 0) throw Error(Errc::InvalidArgument, "negative signature entry");
  if (p + q > kMaxGenerators) throw Error(Errc::TooLarge, "p+q exceeds " + std::to_string(kMaxGenerators));
  std::vector<int> s;
  s.insert(s.end(), static_cast<std::size_t>(p), 1);
  s.insert(s.end(), static_cast<std::size_t>(q), 0);
  return Signature(std::move(s), Field::Complex);
}

int Signature::p() const { return static_cast<int>(std::count(squares_.begin(), squares_.end(), 1)); }
int Signature::q() const { return static_cast<int>(std::count(squares_.begin(), squares_.end(), -1)); }
int Signature::r() const { return static_cast<int>(std::count(squares_.begin(), squares_.end(), 0)); }

BladeProduct blade_mul(BladeMask a, BladeMask b, const Signature& sig) {
  BladeMask limit = static_cast<BladeMask>(sig.dim());
  if (a >= limit || b >= limit)
    throw Error(Errc::InvalidBlade, "blade mask out of range for " + std::to_string(sig.n()) + " generators");
  return blade_mul_raw(a, b, sig.squares().data());
}

std::string blade_name(BladeMask m) {
  if (m == 0) return "1";
  std::string out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (!(m & 1u)) continue;
    if (!out.empty()) out += "*";
    out += "e" + std::to_string(i + 1);
  }
  return out;
}

}  // namespace sclif
