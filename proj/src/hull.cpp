#include "cpb/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cpb {

namespace detail {

Vec generalized_cross(const Mat& edges) {
  const int k = static_cast<int>(edges.cols());
  Vec c(k);
  if (k == 1) {
    c(0) = 1.0;
    return c;
  }
  Mat minor(k - 1, k - 1);
  for (int j = 0; j < k; ++j) {
    for (int col = 0, dst = 0; col < k; ++col) {
      if (col == j) continue;
      minor.col(dst++) = edges.col(col);
    }
    const double det = (k - 1 == 1) ? minor(0, 0)
                       : (k - 1 == 2)
                           ? minor(0, 0) * minor(1, 1) - minor(0, 1) * minor(1, 0)
                           : minor.partialPivLu().determinant();
    c(j) = (j % 2 == 0) ? det : -det;
  }
  return c;
}

Mat orthonormal_span(const Mat& columns, double rel_tol, double abs_tol) {
  if (columns.cols() == 0) return Mat(columns.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeThinU);
  const Vec& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  if (top == 0.0) return Mat(columns.rows(), 0);
  int r = 0;
  while (r < s.size() && s(r) > std::max(rel_tol * top, abs_tol)) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace detail

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& key) const {
    size_t h = 1469598103934665603ull;
    for (int x : key) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

using KeySet = std::unordered_set<std::vector<int>, VecHash>;

struct Face {
  Vec n;
  double h = 0.0;
  std::vector<int> members;  // every input point within tol of the plane
  std::vector<int> verts;    // extreme points of the face
  double measure = 0.0;
};

struct Wrapped {
  std::vector<Face> facets;
  std::vector<int> verts;
  double volume = 0.0;
};

// Complement of span(cols) in R^k (cols assumed independent).
Mat complement(const Mat& cols) {
  const int k = static_cast<int>(cols.rows());
  Eigen::HouseholderQR<Mat> qr(cols);
  Mat q = qr.householderQ();
  return q.rightCols(k - cols.cols());
}

// Points within tol of the hyperplane <n,x> = h, sorted.
std::vector<int> on_plane(const Mat& p, const Vec& n, double h, double tol) {
  const Vec s = p.transpose() * n;
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (std::abs(s(i) - h) <= tol) out.push_back(i);
  return out;
}

// Rotate the supporting hyperplane with normal n through the flat at r0 toward
// direction t until it touches another point. Returns the new unit normal and
// stores the points within tol of the new hyperplane in `members`.
Vec pivot(const Mat& p, const Vec& n, const Vec& t, const Vec& r0, double tol, std::vector<int>& members) {
  const int k = static_cast<int>(p.rows());
  const int np = static_cast<int>(p.cols());
  const double b0 = n.dot(r0), a0 = t.dot(r0);
  std::vector<double> av(np), bv(np);
  // the contact angle atan2(-b, a) is smallest where a / (-b) is largest
  int best = -1;
  double best_cot = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < np; ++i) {
    const double* x = p.col(i).data();
    double a = -a0, b = -b0;
    for (int j = 0; j < k; ++j) {
      a += t(j) * x[j];
      b += n(j) * x[j];
    }
    av[i] = a;
    bv[i] = b;
    if (b >= -tol) continue;
    const double cot = a / -b;
    if (cot > best_cot) {
      best_cot = cot;
      best = i;
    }
  }
  if (best < 0) throw DimensionError("hull: no point off the supporting hyperplane");
  const double alpha = av[best], beta = bv[best];
  const double norm = std::hypot(alpha, beta);
  members.clear();
  for (int i = 0; i < np; ++i)
    if (std::abs(alpha * bv[i] - beta * av[i]) <= tol * norm) members.push_back(i);
  return (alpha * n - beta * t) / norm;
}

// Best-fit plane through the members, oriented like `hint`.
void refit(const Mat& p, Face& f, const Vec& hint) {
  const int k = static_cast<int>(p.rows());
  const int nm = static_cast<int>(f.members.size());
  Vec n;
  Vec c = Vec::Zero(k);
  for (int v : f.members) c += p.col(v);
  c /= nm;
  if (nm == k) {
    Mat edges(k - 1, k);
    for (int i = 1; i < k; ++i) edges.row(i - 1) = (p.col(f.members[i]) - p.col(f.members[0])).transpose();
    n = detail::generalized_cross(edges);
    const double nn = n.norm();
    if (nn > 0.0) n /= nn;
    else n = hint;
  } else {
    Mat centered(k, nm);
    for (int i = 0; i < nm; ++i) centered.col(i) = p.col(f.members[i]) - c;
    Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeFullU);
    n = svd.matrixU().col(k - 1);
  }
  if (n.dot(hint) < 0) n = -n;
  f.n = n;
  f.h = n.dot(c);
}

Wrapped wrap(const Mat& p, double tol);

struct Ridge {
  std::vector<int> members;  // indices into the parent point set
  Vec t;                     // outward direction inside the facet hyperplane
};

// Measure, extreme points and ridges of a facet.
void analyse_facet(const Mat& p, Face& f, std::vector<Ridge>& ridges, double tol) {
  const int k = static_cast<int>(p.rows());
  ridges.clear();
  const int nm = static_cast<int>(f.members.size());
  if (nm == k) {
    Mat edges(k - 1, k);
    for (int i = 1; i < k; ++i) edges.row(i - 1) = (p.col(f.members[i]) - p.col(f.members[0])).transpose();
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    const double area = detail::generalized_cross(edges).norm() / fact;
    if (area > std::pow(tol, k - 1)) {
      f.measure = area;
      f.verts = f.members;
      // outward ridge normals inside the facet are the negated gradients of
      // the barycentric coordinates
      Mat e(k, k - 1);
      for (int i = 1; i < k; ++i) e.col(i - 1) = p.col(f.members[i]) - p.col(f.members[0]);
      const Mat g = (e.transpose() * e).ldlt().solve(e.transpose());
      for (int j = 0; j < k; ++j) {
        Ridge r;
        for (int i = 0; i < k; ++i)
          if (i != j) r.members.push_back(f.members[i]);
        Vec grad = (j == 0) ? Vec(-g.colwise().sum().transpose()) : Vec(g.row(j - 1).transpose());
        r.t = -grad.normalized();
        ridges.push_back(std::move(r));
      }
      return;
    }
  }
  Mat frame = complement(Mat(f.n));
  const Vec origin = p.col(f.members[0]);
  Mat local(k - 1, nm);
  for (int i = 0; i < nm; ++i) local.col(i) = frame.transpose() * (p.col(f.members[i]) - origin);
  Wrapped sub = wrap(local, tol);
  f.measure = sub.volume;
  f.verts.clear();
  for (int v : sub.verts) f.verts.push_back(f.members[v]);
  std::sort(f.verts.begin(), f.verts.end());
  for (const Face& sf : sub.facets) {
    Ridge r;
    for (int v : sf.members) r.members.push_back(f.members[v]);
    r.t = frame * sf.n;
    ridges.push_back(std::move(r));
  }
}

Wrapped wrap_line(const Mat& p, double tol) {
  Wrapped w;
  int lo = 0, hi = 0;
  for (int i = 1; i < p.cols(); ++i) {
    if (p(0, i) < p(0, lo)) lo = i;
    if (p(0, i) > p(0, hi)) hi = i;
  }
  for (int side = 0; side < 2; ++side) {
    Face f;
    const int e = side == 0 ? lo : hi;
    f.n = Vec::Constant(1, side == 0 ? -1.0 : 1.0);
    f.h = f.n(0) * p(0, e);
    f.members = on_plane(p, f.n, f.h, tol);
    f.verts = {e};
    f.measure = 1.0;
    w.facets.push_back(std::move(f));
  }
  w.verts = {std::min(lo, hi), std::max(lo, hi)};
  w.volume = p(0, hi) - p(0, lo);
  return w;
}

// Gift wrapping over facets. Each facet is found by pivoting about a ridge of
// an already known facet; ridges come from the hull of the facet itself.
Wrapped wrap(const Mat& p, double tol) {
  const int k = static_cast<int>(p.rows());
  if (k == 1) return wrap_line(p, tol);

  // Initial facet: start from the supporting hyperplane x_0 = min and rotate
  // about the current face until it has full dimension k-1.
  int i0 = 0;
  for (int i = 1; i < p.cols(); ++i)
    if (p(0, i) < p(0, i0)) i0 = i;
  Vec n = -Vec::Unit(k, 0);
  std::vector<int> face = on_plane(p, n, n.dot(p.col(i0)), tol);
  while (true) {
    const Vec s0 = p.col(face[0]);
    Mat centered(k, face.size());
    for (size_t i = 0; i < face.size(); ++i) centered.col(i) = p.col(face[i]) - s0;
    Mat dirs(k, 0);
    if (face.size() > 1) {
      Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeThinU);
      int r = 0;
      while (r < svd.singularValues().size() && svd.singularValues()(r) > tol) ++r;
      dirs = svd.matrixU().leftCols(r);
    }
    if (dirs.cols() >= k - 1) break;
    Mat span(k, dirs.cols() + 1);
    span.col(0) = n;
    span.rightCols(dirs.cols()) = dirs;
    const Vec t = complement(span).col(0);
    n = pivot(p, n, t, s0, tol, face);
  }

  Wrapped w;
  std::unordered_map<std::vector<int>, int, VecHash> seen;
  KeySet done_ridges;
  {
    Face f;
    f.members = face;
    refit(p, f, n);
    seen.emplace(f.members, 0);
    w.facets.push_back(std::move(f));
  }
  std::vector<Ridge> ridges;
  for (size_t fi = 0; fi < w.facets.size(); ++fi) {
    analyse_facet(p, w.facets[fi], ridges, tol);
    const Vec fn = w.facets[fi].n;
    for (Ridge& r : ridges) {
      std::vector<int> key = r.members;
      std::sort(key.begin(), key.end());
      if (!done_ridges.insert(key).second) continue;
      const Vec r0 = p.col(r.members[0]);
      Face g;
      const Vec m = pivot(p, fn, r.t, r0, tol, g.members);
      if (seen.count(g.members)) continue;
      refit(p, g, m);
      seen.emplace(g.members, static_cast<int>(w.facets.size()));
      w.facets.push_back(std::move(g));
    }
  }

  // Faces found twice through tolerance-boundary membership differences.
  std::sort(w.facets.begin(), w.facets.end(), [](const Face& a, const Face& b) { return a.n(0) < b.n(0); });
  std::vector<Face> unique;
  std::vector<char> dead(w.facets.size(), 0);
  for (size_t i = 0; i < w.facets.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = i + 1; j < w.facets.size() && w.facets[j].n(0) - w.facets[i].n(0) <= kTol.merge_angle; ++j) {
      if ((w.facets[j].n - w.facets[i].n).norm() <= kTol.merge_angle && std::abs(w.facets[j].h - w.facets[i].h) <= tol)
        dead[j] = 1;
    }
    unique.push_back(std::move(w.facets[i]));
  }
  w.facets = std::move(unique);

  std::vector<int> verts;
  for (const Face& f : w.facets) verts.insert(verts.end(), f.verts.begin(), f.verts.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  w.verts = verts;
  Vec c = Vec::Zero(k);
  for (int v : verts) c += p.col(v);
  c /= static_cast<double>(verts.size());
  double vol = 0.0;
  for (const Face& f : w.facets) vol += (f.h - f.n.dot(c)) * f.measure;
  w.volume = vol / k;
  return w;
}

double coordinate_scale(const Mat& pts) {
  const Vec lo = pts.rowwise().minCoeff();
  const Vec hi = pts.rowwise().maxCoeff();
  double s = (hi - lo).maxCoeff();
  s = std::max(s, pts.cwiseAbs().maxCoeff() * 1e-6);
  return s > 0.0 ? s : 1.0;
}

// Sort columns lexicographically and drop near duplicates.
std::vector<int> unique_columns(const Mat& pts, double tol) {
  const int n = static_cast<int>(pts.cols());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    for (int r = 0; r < pts.rows(); ++r)
      if (pts(r, a) != pts(r, b)) return pts(r, a) < pts(r, b);
    return a < b;
  });
  std::vector<int> keep;
  for (int i : idx) {
    bool dup = false;
    for (auto it = keep.rbegin(); it != keep.rend(); ++it) {
      if (pts(0, i) - pts(0, *it) > tol) break;
      if ((pts.col(i) - pts.col(*it)).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

HullResult compute_hull(const Mat& points, const HullOptions& options) {
  const int d = static_cast<int>(points.rows());
  if (d < 1) throw InvalidArgument("hull: ambient dimension must be positive");
  if (points.cols() == 0) throw InvalidArgument("hull: empty point set");
  if (!points.allFinite()) throw InvalidArgument("hull: non-finite coordinates");

  const double scale = coordinate_scale(points);
  const double tol = kTol.merge_offset * scale;
  const std::vector<int> keep = unique_columns(points, 1e-12 * scale);
  Mat pts(d, keep.size());
  for (size_t i = 0; i < keep.size(); ++i) pts.col(i) = points.col(keep[i]);

  HullResult res;
  res.ambient_dim = d;
  res.scale = scale;
  const Vec origin = pts.rowwise().mean();
  res.affine_origin = origin;
  const Mat centered = pts.colwise() - origin;
  // directions thinner than the wrapping tolerance do not count
  Mat basis = detail::orthonormal_span(centered, 1e-10, tol);
  if (centered.cwiseAbs().maxCoeff() <= 1e-12 * scale) basis = Mat(d, 0);
  const int k = static_cast<int>(basis.cols());
  res.affine_dim = k;
  res.affine_basis = basis;
  if (k < d && !options.allow_lower_dim) {
    throw DimensionError("hull: points span an affine subspace of dimension " + std::to_string(k) +
                         " in R^" + std::to_string(d));
  }

  if (k == 0) {
    res.vertices = pts.col(0);
    res.relative_volume = 1.0;
    if (d == 1) {
      for (double s : {-1.0, 1.0}) {
        HullFacet f;
        f.normal = Vec::Constant(1, s);
        f.offset = s * pts(0, 0);
        f.measure = 1.0;
        f.vertices = {0};
        res.facets.push_back(f);
      }
    }
    return res;
  }

  const Mat local = (k == d) ? pts : Mat(basis.transpose() * centered);
  // slivers thinner than the tolerance can stall the wrapping; coarser
  // tolerances treat them as flat
  Wrapped w;
  for (double t = tol;; t *= 10.0) {
    try {
      w = wrap(local, t);
      break;
    } catch (const DimensionError&) {
      if (t >= 1e3 * tol) throw;
    }
  }
  std::vector<int> remap(pts.cols(), -1);
  res.vertices.resize(d, w.verts.size());
  for (size_t i = 0; i < w.verts.size(); ++i) {
    remap[w.verts[i]] = static_cast<int>(i);
    res.vertices.col(i) = pts.col(w.verts[i]);
  }

  if (k == d) {
    res.volume = w.volume;
    res.relative_volume = w.volume;
    for (Face& f : w.facets) {
      HullFacet hf;
      hf.normal = f.n;
      hf.offset = f.h;
      hf.measure = f.measure;
      for (int v : f.verts) hf.vertices.push_back(remap[v]);
      res.facets.push_back(std::move(hf));
    }
    return res;
  }

  res.relative_volume = w.volume;
  if (k == d - 1) {
    // Two-sided facet convention for bodies of codimension one.
    Vec u = complement(basis).col(0);
    std::vector<int> all(res.vertices.cols());
    std::iota(all.begin(), all.end(), 0);
    for (double s : {1.0, -1.0}) {
      HullFacet f;
      f.normal = s * u;
      f.offset = f.normal.dot(origin);
      f.measure = w.volume;
      f.vertices = all;
      res.facets.push_back(f);
    }
  }
  return res;
}

}  // namespace cpb
