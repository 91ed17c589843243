#include "skel/ramification.hpp"

#include "skel/error.hpp"

#include <string>

namespace skel {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_orders(std::span<const std::int64_t> orders) {
  if (orders.empty())
    throw Error(ErrorCode::MalformedFiltration, "empty ramification filtration");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1)
      throw Error(ErrorCode::MalformedFiltration,
                  "filtration order at index " + std::to_string(i) + " is not positive");
    if (i > 0 && orders[i - 1] % orders[i] != 0)
      throw Error(ErrorCode::MalformedFiltration,
                  "filtration order at index " + std::to_string(i) +
                      " does not divide its predecessor");
  }
}

}  // namespace

void validate(const RamificationDatum& datum) {
  check_orders(datum.filtration_orders);
  if (datum.e < 1) throw Error(ErrorCode::InvalidValue, "ramification index must be positive");
  if (datum.p != 0 && !is_prime(datum.p))
    throw Error(ErrorCode::InvalidValue, "residue characteristic must be 0 or prime");
  if (datum.p == 0)
    for (std::size_t i = 1; i < datum.filtration_orders.size(); ++i)
      if (datum.filtration_orders[i] != 1)
        throw Error(ErrorCode::MalformedFiltration,
                    "wild inertia in residue characteristic 0");
}

std::int64_t hilbert_different(std::span<const std::int64_t> orders) {
  check_orders(orders);
  std::int64_t sum = 0;
  for (auto g : orders) sum += g - 1;
  return sum;
}

std::vector<std::int64_t> lower_jumps(std::span<const std::int64_t> orders) {
  check_orders(orders);
  std::vector<std::int64_t> jumps;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const std::int64_t next = i + 1 < orders.size() ? orders[i + 1] : 1;
    if (orders[i] > next) jumps.push_back(static_cast<std::int64_t>(i));
  }
  return jumps;
}

DifferentValue cyclic_jump_invariants(std::int64_t p, std::int64_t j) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (j < 1) throw Error(ErrorCode::OutOfRange, "ramification jump must be positive");
  return {(p - 1) * (j + 1), (p - 1) * j, p};
}

}  // namespace skel
