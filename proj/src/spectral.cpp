#include "walkbound/spectral.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace walkbound {

FiniteTarget FiniteTarget::make(const GroupSpec& finite_spec, size_t size_cap) {
  if (finite_spec.free_rank != 0)
    throw UnsupportedOracle("target has a torus factor; finite-Y oracle only");
  FiniteTarget t;
  t.spec = finite_spec;
  for (const Int& m : finite_spec.torsion) {
    t.radix.push_back(to_int64(m));
    if (t.size > size_cap / static_cast<size_t>(t.radix.back()))
      throw ResourceError("finite target exceeds the oracle size cap");
    t.size *= static_cast<size_t>(t.radix.back());
  }
  // Row-major strides: last coordinate varies fastest.
  t.stride.assign(t.radix.size(), 1);
  for (int i = static_cast<int>(t.radix.size()) - 2; i >= 0; --i)
    t.stride[i] = t.stride[i + 1] * static_cast<size_t>(t.radix[i + 1]);
  return t;
}

size_t FiniteTarget::index_of(const GroupElement& y) const {
  size_t idx = 0;
  for (size_t j = 0; j < radix.size(); ++j)
    idx += stride[j] * static_cast<size_t>(to_int64(y.coords[j]));
  return idx;
}

GroupElement FiniteTarget::element_at(size_t idx) const {
  std::vector<Int> c(radix.size());
  for (size_t j = 0; j < radix.size(); ++j) {
    c[j] = static_cast<long>(idx / stride[j] % static_cast<size_t>(radix[j]));
  }
  GroupElement e;
  e.coords = std::move(c);
  return e;
}

size_t FiniteTarget::add(size_t a, size_t b) const {
  size_t idx = 0;
  for (size_t j = 0; j < radix.size(); ++j) {
    size_t r = static_cast<size_t>(radix[j]);
    size_t cj = (a / stride[j] % r + b / stride[j] % r) % r;
    idx += stride[j] * cj;
  }
  return idx;
}

size_t FiniteTarget::negate(size_t a) const {
  size_t idx = 0;
  for (size_t j = 0; j < radix.size(); ++j) {
    size_t r = static_cast<size_t>(radix[j]);
    size_t cj = (r - a / stride[j] % r) % r;
    idx += stride[j] * cj;
  }
  return idx;
}

Rat FiniteTarget::character_phase(size_t chi, size_t y) const {
  Rat phase = 0;
  for (size_t j = 0; j < radix.size(); ++j) {
    long a = static_cast<long>(chi / stride[j] % static_cast<size_t>(radix[j]));
    long yj = static_cast<long>(y / stride[j] % static_cast<size_t>(radix[j]));
    phase += Rat(a * yj, radix[j]);
  }
  return frac_mod_one(phase);
}

namespace {

std::complex<double> unit_phase(const Rat& turns) {
  double t = 2.0 * std::numbers::pi * turns.get_d();
  return {std::cos(t), std::sin(t)};
}

// phi(s) as target indices for every support point.
std::vector<size_t> support_images(const RokhlinSystem& sys,
                                   const FiniteTarget& target) {
  std::vector<size_t> img;
  img.reserve(sys.p.support.size());
  for (const GroupElement& s : sys.p.support)
    img.push_back(target.index_of(sys.action.apply(s).finite));
  return img;
}

}  // namespace

SpectrumReport character_spectrum(const RokhlinSystem& sys) {
  if (!sys.action.target_is_finite())
    throw UnsupportedOracle("character spectrum requires a finite target");
  FiniteTarget target = FiniteTarget::make(sys.action.finite_part);
  std::vector<size_t> img = support_images(sys, target);
  std::vector<double> w(sys.p.weights.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = sys.p.weights[i].get_d();

  SpectrumReport rep;
  rep.eigenvalues.resize(target.size);
  for (size_t chi = 0; chi < target.size; ++chi) {
    CharacterEigenvalue& ev = rep.eigenvalues[chi];
    ev.index = chi;
    Rat first_phase = target.character_phase(chi, img[0]);
    bool constant = true, all_zero = first_phase == 0;
    std::complex<double> sum = 0.0;
    for (size_t i = 0; i < img.size(); ++i) {
      Rat phase = target.character_phase(chi, img[i]);
      if (phase != first_phase) constant = false;
      if (phase != 0) all_zero = false;
      sum += w[i] * unit_phase(phase);
    }
    ev.unit_modulus_exact = constant;
    ev.equals_one_exact = all_zero;
    // Weights sum to exactly 1, so a constant phase pins the value on the
    // unit circle; bypass the rounded sum there.
    ev.value = constant ? unit_phase(first_phase) : sum;
  }
  rep.eigenvalues[0].value = 1.0;  // trivial character

  double max_mod = 0.0;
  for (size_t chi = 1; chi < target.size; ++chi) {
    const CharacterEigenvalue& ev = rep.eigenvalues[chi];
    max_mod = std::max(max_mod, std::abs(ev.value));
    if (ev.unit_modulus_exact) {
      rep.has_nontrivial_unit = true;
      rep.unit_character_indices.push_back(chi);
    }
    if (ev.equals_one_exact) rep.has_nontrivial_one = true;
  }
  rep.max_nontrivial_modulus = max_mod;
  rep.gap = 1.0 - max_mod;
  return rep;
}

std::vector<Rat> pushforward_power(const RokhlinSystem& sys, long n) {
  if (n < 1) throw InputError("pushforward power requires n >= 1");
  if (!sys.action.target_is_finite())
    throw UnsupportedOracle("pushforward requires a finite target");
  FiniteTarget target = FiniteTarget::make(sys.action.finite_part);
  // Push p to Y first, then convolve there: supports stay within |Y|.
  std::vector<size_t> img = support_images(sys, target);
  std::vector<Rat> base(target.size);
  for (size_t i = 0; i < img.size(); ++i) base[img[i]] += sys.p.weights[i];
  std::vector<Rat> acc = base;
  for (long step = 1; step < n; ++step) {
    std::vector<Rat> nxt(target.size);
    for (size_t y = 0; y < target.size; ++y) {
      if (acc[y] == 0) continue;
      for (size_t i = 0; i < img.size(); ++i)
        nxt[target.add(y, img[i])] += acc[y] * sys.p.weights[i];
    }
    acc = std::move(nxt);
  }
  return acc;
}

std::vector<double> mixing_profile(const JumpMeasure& p, long n_max) {
  if (!p.group.is_finite())
    throw UnsupportedOracle("mixing profile requires a finite group");
  if (n_max < 1) throw InputError("n_max must be >= 1");
  Subgroup h_tail = tail_subgroup(p);
  Int h_order = *h_tail.order();
  Rat unif(1, h_order);

  std::vector<double> profile;
  profile.reserve(static_cast<size_t>(n_max));
  JumpMeasure power = p;
  GroupElement coset_rep = p.support[0];
  for (long n = 1; n <= n_max; ++n) {
    // TV against the uniform measure on n*s_1 + H_t.
    Rat tv = 0;
    Int coset_hits = 0;
    for (size_t i = 0; i < power.support.size(); ++i) {
      bool in_coset = member(h_tail, p.group.sub(power.support[i], coset_rep));
      if (in_coset) {
        ++coset_hits;
        tv += abs(power.weights[i] - unif);
      } else {
        tv += power.weights[i];
      }
    }
    tv += Rat(h_order - coset_hits) * unif;
    tv /= 2;
    profile.push_back(tv.get_d());
    if (n < n_max) {
      power = convolve(power, p);
      coset_rep = p.group.add(coset_rep, p.support[0]);
    }
  }
  return profile;
}

namespace {

struct TransferPlan {
  FiniteTarget target;
  std::vector<double> w;
  // lookup[i * size + y] = y - phi(s_i)
  std::vector<size_t> lookup;
};

TransferPlan make_transfer_plan(const RokhlinSystem& sys) {
  if (!sys.action.target_is_finite())
    throw UnsupportedOracle("transfer operator requires a finite target");
  TransferPlan plan{FiniteTarget::make(sys.action.finite_part), {}, {}};
  std::vector<size_t> img = support_images(sys, plan.target);
  plan.w.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) plan.w[i] = sys.p.weights[i].get_d();
  plan.lookup.resize(img.size() * plan.target.size);
  for (size_t i = 0; i < img.size(); ++i) {
    size_t neg = plan.target.negate(img[i]);
    for (size_t y = 0; y < plan.target.size; ++y)
      plan.lookup[i * plan.target.size + y] = plan.target.add(y, neg);
  }
  return plan;
}

}  // namespace

std::vector<std::complex<double>> transfer_iterate_reference(
    const RokhlinSystem& sys, std::vector<std::complex<double>> h, long n) {
  TransferPlan plan = make_transfer_plan(sys);
  if (h.size() != plan.target.size)
    throw InputError("function length does not match the target size");
  std::vector<std::complex<double>> out(h.size());
  for (long step = 0; step < n; ++step) {
    for (size_t y = 0; y < h.size(); ++y) {
      std::complex<double> acc = 0.0;
      for (size_t i = 0; i < plan.w.size(); ++i)
        acc += plan.w[i] * h[plan.lookup[i * plan.target.size + y]];
      out[y] = acc;
    }
    std::swap(h, out);
  }
  return h;
}

std::vector<std::complex<double>> transfer_iterate(
    const RokhlinSystem& sys, std::vector<std::complex<double>> h, long n) {
  TransferPlan plan = make_transfer_plan(sys);
  if (h.size() != plan.target.size)
    throw InputError("function length does not match the target size");
  std::vector<std::complex<double>> out(h.size());
  const long size = static_cast<long>(h.size());
  for (long step = 0; step < n; ++step) {
    // Each point is an independent dot product in a fixed order, so the
    // parallel result matches the serial one bit for bit.
#pragma omp parallel for schedule(static)
    for (long y = 0; y < size; ++y) {
      std::complex<double> acc = 0.0;
      for (size_t i = 0; i < plan.w.size(); ++i)
        acc += plan.w[i] * h[plan.lookup[i * plan.target.size + y]];
      out[y] = acc;
    }
    std::swap(h, out);
  }
  return h;
}

}  // namespace walkbound
