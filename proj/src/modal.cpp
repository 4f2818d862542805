#include "recnodes/modal.hpp"

#include "recnodes/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace recnodes {

namespace {

struct Entry {
  double val;
  double dt;
  double dw;
};

// Jacobi polynomial P_m^{(a,0)} homogenized in (t, w):
//   Jt_m(t, w) = (t + w)^m P_m^{(a,0)}((t - w) / (t + w)),
// a polynomial in (t, w), generated with its t- and w-partials by the
// homogenized three-term recurrence.  tab[m] receives degree m.
void jacobi_homogeneous(double a, int mmax, double t, double w, Entry* tab)
{
  tab[0] = {1.0, 0.0, 0.0};
  if (mmax == 0)
    return;
  tab[1] = {(a + 1.0) * t - w, a + 1.0, -1.0};
  double u = t + w;
  double z = t - w;
  for (int m = 1; m < mmax; ++m) {
    double c0 = 2.0 * (m + 1.0) * (m + a + 1.0) * (2.0 * m + a);
    double c1 = (2.0 * m + a + 1.0) * (2.0 * m + a) * (2.0 * m + a + 2.0);
    double c2 = (2.0 * m + a + 1.0) * a * a;
    double c3 = 2.0 * (m + a) * m * (2.0 * m + a + 2.0);
    double lin = c1 * z + c2 * u;
    const Entry& jm = tab[m];
    const Entry& jp = tab[m - 1];
    tab[m + 1].val = (lin * jm.val - c3 * u * u * jp.val) / c0;
    tab[m + 1].dt =
        ((c1 + c2) * jm.val + lin * jm.dt - c3 * (2.0 * u * jp.val + u * u * jp.dt)) / c0;
    tab[m + 1].dw =
        ((-c1 + c2) * jm.val + lin * jm.dw - c3 * (2.0 * u * jp.val + u * u * jp.dw)) / c0;
  }
}

} // namespace

ModalBasis::ModalBasis(int dim, int degree) : dim_(dim), degree_(degree)
{
  if (dim < 1 || dim > kMaxSimplexDim)
    throw std::invalid_argument("ModalBasis: dimension out of range");
  if (degree < 0 || degree > kMaxDegree1D)
    throw std::invalid_argument("ModalBasis: degree out of range");
  for (int m = 0; m <= degree; ++m)
    for (MultiIndex& tup : enumerate_indices(dim - 1, m))
      tuples_.push_back(std::move(tup));
  norms_.reserve(tuples_.size());
  for (const MultiIndex& tup : tuples_) {
    double c = 1.0;
    int partial = 0;
    for (int k = 1; k <= dim_; ++k) {
      partial += tup[k - 1];
      c *= std::sqrt(2.0 * partial + k);
    }
    norms_.push_back(c);
  }
}

void ModalBasis::eval_impl(const std::vector<BaryPoint>& pts, Eigen::MatrixXd* values,
                           std::vector<Eigen::MatrixXd>* partials) const
{
  const auto npts = static_cast<std::int64_t>(pts.size());
  const int nfun = size();
  const int n = degree_;
  if (values)
    values->resize(npts, nfun);
  if (partials) {
    partials->assign(dim_ + 1, Eigen::MatrixXd());
    for (auto& m : *partials)
      m.resize(npts, nfun);
  }

  parallel_for(npts, [&](std::int64_t begin, std::int64_t end) {
    // tab[k-1][q][m]: level-k factor of degree m with parameter 2q + k - 1
    std::vector<std::vector<std::vector<Entry>>> tab(dim_);
    for (int k = 1; k <= dim_; ++k) {
      tab[k - 1].resize(n + 1);
      for (int q = 0; q <= n; ++q)
        tab[k - 1][q].resize(n - q + 1);
    }
    std::vector<Entry> fac(dim_);
    std::vector<double> pref(dim_ + 1), suf(dim_ + 1), dwtail(dim_ + 2);

    for (std::int64_t i = begin; i < end; ++i) {
      const BaryPoint& b = pts[i];
      if (static_cast<int>(b.size()) != dim_ + 1)
        throw std::invalid_argument("ModalBasis: barycentric length mismatch");
      double s = b[0];
      for (int k = 1; k <= dim_; ++k) {
        double t = b[k];
        for (int q = 0; q <= n; ++q)
          jacobi_homogeneous(2.0 * q + k - 1.0, n - q, t, s, tab[k - 1][q].data());
        s += t;
      }

      for (int f = 0; f < nfun; ++f) {
        const MultiIndex& tup = tuples_[f];
        int q = 0;
        for (int k = 0; k < dim_; ++k) {
          fac[k] = tab[k][q][tup[k]];
          q += tup[k];
        }
        pref[0] = 1.0;
        for (int k = 0; k < dim_; ++k)
          pref[k + 1] = pref[k] * fac[k].val;
        double c = norms_[f];
        if (values)
          (*values)(i, f) = c * pref[dim_];
        if (partials) {
          suf[dim_] = 1.0;
          for (int k = dim_ - 1; k >= 0; --k)
            suf[k] = suf[k + 1] * fac[k].val;
          // dwtail[k] = sum over levels >= k of the w-partial terms
          dwtail[dim_] = 0.0;
          for (int k = dim_ - 1; k >= 0; --k)
            dwtail[k] = dwtail[k + 1] + fac[k].dw * pref[k] * suf[k + 1];
          (*partials)[0](i, f) = c * dwtail[0];
          for (int k = 0; k < dim_; ++k)
            (*partials)[k + 1](i, f) =
                c * (fac[k].dt * pref[k] * suf[k + 1] + dwtail[k + 1]);
        }
      }
    }
  });
}

Eigen::MatrixXd ModalBasis::eval(const std::vector<BaryPoint>& pts) const
{
  Eigen::MatrixXd values;
  eval_impl(pts, &values, nullptr);
  return values;
}

std::vector<Eigen::MatrixXd> ModalBasis::grad_bary(const std::vector<BaryPoint>& pts) const
{
  std::vector<Eigen::MatrixXd> partials;
  eval_impl(pts, nullptr, &partials);
  return partials;
}

std::vector<Eigen::MatrixXd> ModalBasis::grad(const std::vector<BaryPoint>& pts,
                                              const SimplexGeometry& g) const
{
  if (g.dim() != dim_)
    throw std::invalid_argument("ModalBasis::grad: geometry dimension mismatch");
  std::vector<Eigen::MatrixXd> partials = grad_bary(pts);
  const Eigen::MatrixXd& bg = g.bary_gradient(); // (d+1) x d
  std::vector<Eigen::MatrixXd> out(dim_);
  for (int j = 0; j < dim_; ++j) {
    out[j] = bg(0, j) * partials[0];
    for (int i = 1; i <= dim_; ++i)
      out[j] += bg(i, j) * partials[i];
  }
  return out;
}

} // namespace recnodes
