#include "rmatch/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace rmatch {

BigCount BigCount::from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  for (char c : s)
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad decimal digit in \"" + s + "\"");
  BigCount out;
  out.v_ = boost::multiprecision::cpp_int(s);
  return out;
}

double BigCount::to_double() const { return v_.convert_to<double>(); }

double BigCount::log() const {
  if (v_.is_zero()) throw std::domain_error("log of zero count");
  std::size_t bits = msb(v_) + 1;
  if (bits <= 63) return std::log(static_cast<double>(v_.convert_to<std::uint64_t>()));
  // Top 64 bits carry the full double mantissa and then some; the discarded
  // tail perturbs the log by less than 2^-63.
  std::size_t shift = bits - 64;
  std::uint64_t top = (v_ >> shift).convert_to<std::uint64_t>();
  return std::log(static_cast<double>(top)) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace rmatch
