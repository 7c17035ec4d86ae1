#include "tropical/double_description.hpp"

#include "tropical/error.hpp"

#include <bit>
#include <cstdint>

namespace tropical {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t(1) << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  IntVector v;
  Bits zeros;  // processed inequalities tight on v
};

int sign(const Integer& x) { return sgn(x); }

}  // namespace

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& inequalities,
                               const std::vector<IntVector>& equations) {
  for (const auto& a : inequalities)
    if (a.size() != dim) throw DimensionMismatch("cone_generators: inequality length");
  for (const auto& e : equations)
    if (e.size() != dim) throw DimensionMismatch("cone_generators: equation length");

  const std::size_t nineq = inequalities.size();
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::size_t eqs_done = 0;
  Bits all_done(nineq);

  auto process = [&](const IntVector& c, bool is_eq, std::size_t idx) {
    // A lineality direction not orthogonal to c: use it to project everything onto c = 0.
    std::size_t pick = lin.size();
    for (std::size_t k = 0; k < lin.size(); ++k)
      if (dot(c, lin[k]) != 0) {
        pick = k;
        break;
      }
    if (pick < lin.size()) {
      IntVector l0 = lin[pick];
      Integer s0 = dot(c, l0);
      if (s0 < 0) {
        l0 = negated(l0);
        s0 = -s0;
      }
      std::vector<IntVector> rest;
      for (std::size_t k = 0; k < lin.size(); ++k) {
        if (k == pick) continue;
        Integer s = dot(c, lin[k]);
        IntVector l = lin[k];
        if (s != 0)
          for (std::size_t j = 0; j < dim; ++j) l[j] = s0 * l[j] - s * l0[j];
        rest.push_back(primitive(l));
      }
      for (auto& r : rays) {
        Integer s = dot(c, r.v);
        if (s != 0) {
          for (std::size_t j = 0; j < dim; ++j) r.v[j] = s0 * r.v[j] - s * l0[j];
          r.v = primitive(r.v);
        }
        if (!is_eq) r.zeros.set(idx);
      }
      lin = std::move(rest);
      if (!is_eq) rays.push_back(Ray{primitive(l0), all_done});
    } else {
      std::vector<std::size_t> posi, nega;
      std::vector<Ray> next;
      std::vector<Integer> val(rays.size());
      for (std::size_t k = 0; k < rays.size(); ++k) {
        val[k] = dot(c, rays[k].v);
        int s = sign(val[k]);
        if (s > 0)
          posi.push_back(k);
        else if (s < 0)
          nega.push_back(k);
      }
      // Tight inequalities two adjacent extreme rays must share.
      const long need = static_cast<long>(dim) - static_cast<long>(lin.size()) - 2 - static_cast<long>(eqs_done);
      for (std::size_t p : posi)
        for (std::size_t q : nega) {
          Bits z = rays[p].zeros & rays[q].zeros;
          if (static_cast<long>(z.count()) < need) continue;
          bool adjacent = true;
          for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
            if (k != p && k != q && z.subset_of(rays[k].zeros)) adjacent = false;
          if (!adjacent) continue;
          IntVector w(dim);
          for (std::size_t j = 0; j < dim; ++j) w[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
          Ray r{primitive(w), z};
          if (!is_eq) r.zeros.set(idx);
          next.push_back(std::move(r));
        }
      for (std::size_t k = 0; k < rays.size(); ++k) {
        int s = sign(val[k]);
        if (s == 0) {
          Ray r = rays[k];
          if (!is_eq) r.zeros.set(idx);
          next.push_back(std::move(r));
        } else if (s > 0 && !is_eq) {
          next.push_back(rays[k]);
        }
      }
      rays = std::move(next);
    }
    if (is_eq)
      ++eqs_done;
    else
      all_done.set(idx);
  };

  for (const auto& e : equations)
    if (!is_zero(e)) process(e, true, 0);
  for (std::size_t i = 0; i < nineq; ++i)
    if (!is_zero(inequalities[i])) process(inequalities[i], false, i);

  ConeGenerators out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace tropical
