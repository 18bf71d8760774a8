#include "zinbiel/fuzz.hpp"

#include <iterator>
#include <type_traits>

#include "zinbiel/models.hpp"

namespace zinbiel {

Scalar Perturber::delta() {
  static const Scalar choices[] = {Scalar(1),     Scalar(-1),     Scalar(2),    Scalar(-2),
                                   Scalar(1, 2),  Scalar(-1, 2),  Scalar(3),    Scalar(1, 3)};
  return choices[index(std::size(choices))];
}

std::size_t Perturber::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
}

namespace {

Tensor3 bump(const Tensor3& t, std::size_t flat, const Scalar& d) {
  const auto& dims = t.dims();
  Tensor3 out = t;
  const std::size_t k = flat % dims[2];
  const std::size_t j = (flat / dims[2]) % dims[1];
  const std::size_t i = flat / (dims[2] * dims[1]);
  out.add_to({i, j, k}, d);
  return out;
}

std::size_t cube(std::size_t n) { return n * n * n; }

}  // namespace

AlgebraTable Perturber::operator()(const AlgebraTable& a) {
  if (a.dim() == 0) return a;
  return AlgebraTable(a.dim(), bump(a.constants(), index(cube(a.dim())), delta()),
                      a.basis_labels());
}

CoalgebraTable Perturber::operator()(const CoalgebraTable& c) {
  if (c.dim() == 0) return c;
  return CoalgebraTable(c.dim(), bump(c.coproduct(), index(cube(c.dim())), delta()));
}

void Perturber::perturb_family(std::vector<Matrix>& family, std::size_t flat) {
  const std::size_t rows = family.front().rows();
  const std::size_t cols = family.front().cols();
  Matrix& m = family[flat / (rows * cols)];
  m.add_to((flat / cols) % rows, flat % cols, delta());
}

Bimodule Perturber::operator()(const Bimodule& b) {
  const std::size_t n = b.base().dim();
  const std::size_t m = b.v_dim();
  const std::size_t base_size = cube(n);
  const std::size_t family_size = n * m * m;
  const std::size_t total = base_size + 2 * family_size;
  if (total == 0) return b;
  std::size_t flat = index(total);
  if (flat < base_size) {
    AlgebraTable base(n, bump(b.base().constants(), flat, delta()), b.base().basis_labels());
    return Bimodule(std::move(base), m, b.l(), b.r());
  }
  flat -= base_size;
  auto l = b.l();
  auto r = b.r();
  if (flat < family_size) {
    perturb_family(l, flat);
  } else {
    perturb_family(r, flat - family_size);
  }
  return Bimodule(b.base(), m, std::move(l), std::move(r));
}

MatchedPairData Perturber::operator()(const MatchedPairData& mp) {
  const std::size_t n = mp.A.dim();
  const std::size_t p = mp.B.dim();
  const std::size_t sizes[] = {cube(n), cube(p), n * p * p, n * p * p, p * n * n, p * n * n};
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total == 0) return mp;
  std::size_t flat = index(total);
  MatchedPairData out = mp;
  std::size_t part = 0;
  while (flat >= sizes[part]) flat -= sizes[part++];
  switch (part) {
    case 0: out.A = AlgebraTable(n, bump(mp.A.constants(), flat, delta()), mp.A.basis_labels()); break;
    case 1: out.B = AlgebraTable(p, bump(mp.B.constants(), flat, delta()), mp.B.basis_labels()); break;
    case 2: perturb_family(out.lA, flat); break;
    case 3: perturb_family(out.rA, flat); break;
    case 4: perturb_family(out.lB, flat); break;
    default: perturb_family(out.rB, flat); break;
  }
  return out;
}

BialgebraCandidate Perturber::operator()(const BialgebraCandidate& bc) {
  const std::size_t n = bc.A.dim();
  if (n == 0) return bc;
  std::size_t flat = index(2 * cube(n));
  BialgebraCandidate out = bc;
  if (flat < cube(n)) {
    out.A = AlgebraTable(n, bump(bc.A.constants(), flat, delta()), bc.A.basis_labels());
  } else {
    out.Astar = AlgebraTable(n, bump(bc.Astar.constants(), flat - cube(n), delta()),
                             bc.Astar.basis_labels());
  }
  return out;
}

std::vector<AlgebraTable> algebra_seeds() {
  std::vector<AlgebraTable> out;
  for (std::size_t n = 0; n <= 5; ++n) out.push_back(trunc_integration(n, Orientation::Right));
  for (std::size_t n = 0; n <= 4; ++n) out.push_back(trunc_integration(n, Orientation::Left));
  out.push_back(free_halfshuffle(1, 3));
  out.push_back(free_halfshuffle(2, 2));
  for (auto& t : trivial_models()) out.push_back(std::move(t));
  return out;
}

std::vector<Bimodule> bimodule_seeds() {
  std::vector<Bimodule> out;
  for (std::size_t n = 0; n <= 5; ++n) {
    out.push_back(regular_bimodule(trunc_integration(n, Orientation::Right)));
  }
  out.push_back(regular_bimodule(free_halfshuffle(2, 2)));
  out.push_back(zero_bimodule(trunc_integration(2, Orientation::Right), 2));
  out.push_back(zero_bimodule(trunc_integration(3, Orientation::Right), 1));
  out.push_back(zero_bimodule(AlgebraTable::zero(2), 3));
  out.push_back(zero_bimodule(unit_idempotent(), 2));
  return out;
}

std::vector<MatchedPairData> matched_pair_seeds() {
  std::vector<MatchedPairData> out;
  const auto trivial = trivial_models();
  for (const auto& a : trivial) {
    for (const auto& b : trivial) out.push_back(trivial_matched_pair(a, b));
  }
  const AlgebraTable t2 = trunc_integration(2, Orientation::Right);
  const AlgebraTable t3 = trunc_integration(3, Orientation::Right);
  out.push_back(trivial_matched_pair(t3, AlgebraTable::zero(1)));
  out.push_back(trivial_matched_pair(t3, t3));
  out.push_back(trivial_matched_pair(t2, unit_idempotent()));
  // Subalgebra splittings: words in a only / words containing b.
  out.push_back(split_algebra(free_halfshuffle(2, 2), {0, 2}));
  out.push_back(split_algebra(direct_sum(t2, t3), {0, 1, 2}));
  for (std::size_t n = 0; n <= 3; ++n) {
    out.push_back(from_bimodule(regular_bimodule(trunc_integration(n, Orientation::Right))));
  }
  return out;
}

std::vector<CoalgebraTable> coalgebra_seeds() {
  std::vector<CoalgebraTable> out;
  for (const auto& a : algebra_seeds()) {
    out.push_back(dualize(a));
    out.push_back(opposite_coproduct(dualize(a)));
  }
  return out;
}

std::vector<BialgebraCandidate> candidate_seeds() {
  std::vector<BialgebraCandidate> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    const AlgebraTable t = trunc_integration(n - 1, Orientation::Right);
    const AlgebraTable z = AlgebraTable::zero(n);
    out.push_back({z, z});
    out.push_back({t, z});
    out.push_back({z, t});
    out.push_back({t, t});
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> fuzz_from(const std::vector<T>& seeds, std::uint64_t seed, std::size_t count) {
  std::vector<T> pool;
  for (const auto& s : seeds) {
    // Dimension-0 objects have nothing to perturb.
    if constexpr (std::is_same_v<T, Bimodule>) {
      if (s.base().dim() > 0) pool.push_back(s);
    } else if constexpr (std::is_same_v<T, MatchedPairData>) {
      if (s.A.dim() + s.B.dim() > 0) pool.push_back(s);
    } else if constexpr (std::is_same_v<T, BialgebraCandidate>) {
      if (s.A.dim() > 0) pool.push_back(s);
    } else {
      if (s.dim() > 0) pool.push_back(s);
    }
  }
  Perturber perturb(seed);
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(perturb(pool[perturb.index(pool.size())]));
  return out;
}

}  // namespace

std::vector<AlgebraTable> algebra_fuzz(std::uint64_t seed, std::size_t count) {
  return fuzz_from(algebra_seeds(), seed, count);
}
std::vector<Bimodule> bimodule_fuzz(std::uint64_t seed, std::size_t count) {
  return fuzz_from(bimodule_seeds(), seed, count);
}
std::vector<MatchedPairData> matched_pair_fuzz(std::uint64_t seed, std::size_t count) {
  return fuzz_from(matched_pair_seeds(), seed, count);
}
std::vector<CoalgebraTable> coalgebra_fuzz(std::uint64_t seed, std::size_t count) {
  return fuzz_from(coalgebra_seeds(), seed, count);
}
std::vector<BialgebraCandidate> candidate_fuzz(std::uint64_t seed, std::size_t count) {
  return fuzz_from(candidate_seeds(), seed, count);
}

}  // namespace zinbiel
