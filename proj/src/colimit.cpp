#include "afrokhlin/colimit.hpp"

namespace afrokhlin {

Integer FgAbPresentation::torsion_order() const {
  Integer o = 1;
  for (const auto &d : torsion)
    o *= d;
  return o;
}

namespace {

void check_map(const FgAbPresentation &g, const IntMatrix &m) {
  const std::size_t n = g.generator_count();
  const std::size_t r = g.free_rank;
  if (m.rows() != n || m.cols() != n)
    throw InputError("colimit map has shape " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                     std::to_string(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= r && m(i, j) != 0)
        throw InputError("map is not torsion respecting: a torsion generator maps into the free part");
      if (j < r && i != j && m(i, j) != 0)
        throw InputError("unsupported map: the free block must be diagonal");
    }
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (m(i, j) % g.torsion[i - r] != 0)
        throw InputError("unsupported map: free generators may not map into torsion");
  // Well defined: d_j * column j must vanish modulo every d_i.
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = r; i < n; ++i)
      if ((g.torsion[j - r] * m(i, j)) % g.torsion[i - r] != 0)
        throw InputError("map is not well defined on the torsion generators");
}

IntMatrix torsion_block(const FgAbPresentation &g, const IntMatrix &m) {
  const std::size_t r = g.free_rank, t = g.torsion.size();
  IntMatrix b(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      Integer x = m(r + i, r + j) % g.torsion[i];
      if (x < 0)
        x += g.torsion[i];
      b(i, j) = x;
    }
  return b;
}

IntMatrix reduce_rows(IntMatrix m, const std::vector<Integer> &orders) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) %= orders[i];
      if (m(i, j) < 0)
        m(i, j) += orders[i];
    }
  return m;
}

} // namespace

std::vector<Integer> subgroup_invariants(const std::vector<Integer> &orders,
                                         const IntMatrix &gens) {
  const std::size_t t = orders.size();
  if (t == 0)
    return {};
  // H = (colspan[gens | D]) / colspan(D) with D = diag(orders).
  IntMatrix big(t, gens.cols() + t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < gens.cols(); ++j)
      big(i, j) = gens(i, j);
    big(i, gens.cols() + i) = orders[i];
  }
  SmithForm sf = smith_normal_form(big);
  // big = U S V, so colspan(big) has basis U diag(s). Express D in it:
  // C = diag(s)^{-1} * left * D.
  IntMatrix LD(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      LD(i, j) = sf.left(i, j) * orders[j];
  for (std::size_t i = 0; i < t; ++i) {
    const Integer &s = sf.S(i, i);
    for (std::size_t j = 0; j < t; ++j)
      LD(i, j) /= s;  // exact: D lies in the lattice
  }
  std::vector<Integer> out;
  for (const auto &d : smith_normal_form(LD).invariant_factors())
    if (d != 1)
      out.push_back(d);
  return out;
}

FgAbPresentation fgab_colimit(const FgAbPresentation &initial,
                              const EventuallyPeriodicMaps &maps) {
  const std::size_t r = initial.free_rank, t = initial.torsion.size();
  if (initial.localization.size() != r)
    throw InputError("initial presentation needs one localization per free generator");
  for (const auto &d : initial.torsion)
    if (d < 2)
      throw InputError("torsion orders must be >= 2");
  if (maps.period.empty())
    throw InputError("colimit needs a nonempty periodic part");
  for (const auto &m : maps.prefix)
    check_map(initial, m);
  for (const auto &m : maps.period)
    check_map(initial, m);

  FgAbPresentation out;

  // Free part: generator i is scaled by the diagonal entries; it survives
  // iff no entry is zero and is localized at the product of the entries.
  for (std::size_t i = 0; i < r; ++i) {
    SupernaturalNumber loc = initial.localization[i];
    bool killed = false;
    for (const auto &m : maps.prefix) {
      if (m(i, i) == 0) {
        killed = true;
        break;
      }
      loc.multiply(Integer(abs(m(i, i))).get_ui());
    }
    for (const auto &m : maps.period) {
      if (killed || m(i, i) == 0) {
        killed = true;
        break;
      }
      loc.multiply_infinitely(Integer(abs(m(i, i))).get_ui());
    }
    if (!killed) {
      ++out.free_rank;
      out.localization.push_back(loc);
    }
  }

  // Torsion part: the colimit of a finite group along the period map Q is
  // the stable image of Q.
  if (t > 0) {
    IntMatrix q = IntMatrix::identity(t);
    for (const auto &m : maps.period)
      q = reduce_rows(torsion_block(initial, m) * q, initial.torsion);
    IntMatrix power = q;
    std::vector<Integer> inv = subgroup_invariants(initial.torsion, power);
    auto order = [](const std::vector<Integer> &v) {
      Integer o = 1;
      for (const auto &d : v)
        o *= d;
      return o;
    };
    for (;;) {
      power = reduce_rows(q * power, initial.torsion);
      std::vector<Integer> next = subgroup_invariants(initial.torsion, power);
      if (order(next) == order(inv))
        break;
      inv = std::move(next);
    }
    out.torsion = std::move(inv);
  }
  return out;
}

} // namespace afrokhlin

namespace afrokhlin {

namespace {

void check_r(const std::vector<std::uint64_t> &r_period) {
  if (r_period.empty())
    throw InputError("r-sequence must be nonempty");
  for (auto r : r_period)
    if (r < 1)
      throw InputError("r-sequence entries must be >= 1");
    else if (r > (std::uint64_t{1} << 40))
      throw InputError("r-sequence entry too large");
}

} // namespace

KTheoryFixture torsion_fixture(unsigned m, const std::vector<std::uint64_t> &r_period) {
  if (m < 1 || m > 62)
    throw InputError("m must be between 1 and 62");
  check_r(r_period);
  FgAbPresentation k0;
  k0.free_rank = 1;
  k0.localization.resize(1);
  k0.torsion = {Integer(1) << m};
  EventuallyPeriodicMaps maps;
  for (auto r : r_period) {
    IntMatrix t(2, 2);
    t(0, 0) = Integer(static_cast<unsigned long>(2 * r + 1));
    t(1, 1) = 1;
    maps.period.push_back(t);
  }
  FgAbPresentation k1;  // the zero group at every stage
  return {fgab_colimit(k0, maps), k1};
}

KTheoryFixture notor_fixture(const std::vector<std::uint64_t> &r_period) {
  check_r(r_period);
  FgAbPresentation k0;
  k0.free_rank = 2;
  k0.localization.resize(2);
  EventuallyPeriodicMaps k0_maps;
  for (auto r : r_period) {
    IntMatrix t(2, 2);
    t(0, 0) = Integer(static_cast<unsigned long>(2 * r + 1));
    t(1, 1) = 1;
    k0_maps.period.push_back(t);
  }
  FgAbPresentation k1;
  k1.free_rank = 1;
  k1.localization.resize(1);
  EventuallyPeriodicMaps k1_maps;
  k1_maps.period.push_back(IntMatrix::identity(1));
  return {fgab_colimit(k0, k0_maps), fgab_colimit(k1, k1_maps)};
}

} // namespace afrokhlin
