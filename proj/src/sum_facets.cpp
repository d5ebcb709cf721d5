#include "cpb/sum_facets.hpp"

#include "cpb/complex_structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_set>

namespace cpb {

namespace {

using V2 = Eigen::Vector2d;

constexpr double kDirTol = 1e-10;   // |projection| below which a piece is parallel to a hyperplane
constexpr double kSpanTol = 1e-9;   // independence of direction vectors

struct KeyHash {
  size_t operator()(const std::vector<int>& key) const {
    size_t h = 1469598103934665603ull;
    for (int x : key) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

Mat complement(const Mat& cols) {
  const int k = static_cast<int>(cols.rows());
  if (cols.cols() == 0) return Mat::Identity(k, k);
  Eigen::HouseholderQR<Mat> qr(cols);
  Mat q = qr.householderQ();
  return q.rightCols(k - cols.cols());
}

int rank_of(const Mat& dirs) {
  if (dirs.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(dirs);
  const auto& s = svd.singularValues();
  int r = 0;
  while (r < s.size() && s(r) > kSpanTol * std::max(1.0, s(0))) ++r;
  return r;
}

// Converts a 2D body in a frame into the matching piece type.
FlatPiece piece_from_planar(const Vec& offset, const Mat& frame, const PlanarBody& c) {
  const auto& v = c.vertices();
  if (c.dim() == 0) {
    FlatPiece p;
    p.dim = 0;
    p.offset = offset + frame * v[0];
    return p;
  }
  if (c.dim() == 1) return make_segment_piece(offset + frame * v[0], offset + frame * v[1]);
  return make_polygon_piece(offset, frame, v);
}

PlanarBody planar_of(const FlatPiece& p, const Mat& frame2) {
  // coordinates of p's vertices in the plane spanned by frame2 (p assumed inside it, offset dropped)
  std::vector<V2> pts;
  const Mat pts_k = p.points().colwise() - p.offset;
  for (int i = 0; i < pts_k.cols(); ++i) pts.push_back(frame2.transpose() * pts_k.col(i));
  return PlanarBody::from_points(pts);
}

bool in_span(const Mat& frame, const Vec& v) {
  return (v - frame * (frame.transpose() * v)).norm() <= kSpanTol * std::max(1.0, v.norm());
}

}  // namespace

Mat FlatPiece::points() const {
  if (dim == 0) return Mat(offset);
  if (dim == 1) {
    Mat m(offset.size(), 2);
    m.col(0) = offset + lo * frame.col(0);
    m.col(1) = offset + hi * frame.col(0);
    return m;
  }
  Mat m(offset.size(), poly.size());
  for (size_t i = 0; i < poly.size(); ++i) m.col(i) = offset + frame * poly[i];
  return m;
}

double FlatPiece::support(const Vec& n) const {
  double s = n.dot(offset);
  if (dim == 1) {
    const double t = n.dot(frame.col(0));
    s += std::max(t * lo, t * hi);
  } else if (dim == 2) {
    const V2 a = frame.transpose() * n;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : poly) best = std::max(best, a.dot(v));
    s += best;
  }
  return s;
}

double FlatPiece::measure() const {
  if (dim == 1) return hi - lo;
  if (dim == 2) {
    double a = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
      const V2& p = poly[i];
      const V2& q = poly[(i + 1) % poly.size()];
      a += p.x() * q.y() - p.y() * q.x();
    }
    return 0.5 * a;
  }
  return 0.0;
}

FlatPiece make_segment_piece(const Vec& a, const Vec& b) {
  FlatPiece p;
  const Vec d = b - a;
  const double len = d.norm();
  if (len == 0.0) {
    p.dim = 0;
    p.offset = a;
    return p;
  }
  p.dim = 1;
  p.offset = a;
  p.frame = d / len;
  p.lo = 0.0;
  p.hi = len;
  return p;
}

FlatPiece make_polygon_piece(const Vec& offset, const Mat& frame, const std::vector<V2>& ccw) {
  if (frame.cols() != 2 || frame.rows() != offset.size())
    throw InvalidArgument("polygon piece: frame must be k x 2");
  const PlanarBody c = PlanarBody::from_points(ccw);
  if (c.dim() < 2) return piece_from_planar(offset, frame, c);
  FlatPiece p;
  p.dim = 2;
  p.offset = offset;
  p.frame = frame;
  p.poly = c.vertices();
  return p;
}

FlatSum::FlatSum(int k, const std::vector<FlatPiece>& pieces) : k_(k), shift_(Vec::Zero(k)) {
  if (k < 1) throw InvalidArgument("flat sum: dimension must be positive");
  std::vector<FlatPiece> work;
  for (const auto& p : pieces) {
    if (p.offset.size() != k) throw InvalidArgument("flat sum: piece has wrong dimension");
    shift_ += p.offset;
    if (p.dim == 0) continue;
    FlatPiece q = p;
    q.offset = Vec::Zero(k);
    work.push_back(std::move(q));
  }

  // Merge pieces whose spans are nested.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size() && !changed; ++i) {
      for (size_t j = 0; j < work.size() && !changed; ++j) {
        if (i == j || work[j].dim > work[i].dim) continue;
        const FlatPiece& a = work[i];
        const FlatPiece& b = work[j];
        bool nested = true;
        for (int c = 0; c < b.dim; ++c) nested = nested && in_span(a.frame, b.frame.col(c));
        if (!nested) continue;
        FlatPiece merged;
        if (a.dim == 1) {
          const double s = a.frame.col(0).dot(b.frame.col(0)) > 0 ? 1.0 : -1.0;
          merged = a;
          merged.lo = a.lo + std::min(s * b.lo, s * b.hi);
          merged.hi = a.hi + std::max(s * b.lo, s * b.hi);
        } else {
          const PlanarBody sum = minkowski_sum(planar_of(a, a.frame), planar_of(b, a.frame));
          merged = piece_from_planar(Vec::Zero(k), a.frame, sum);
        }
        const size_t lo = std::min(i, j), hi = std::max(i, j);
        work.erase(work.begin() + hi);
        work[lo] = std::move(merged);
        if (work[lo].dim == 0) {
          shift_ += work[lo].offset;
          work.erase(work.begin() + lo);
        }
        changed = true;
      }
    }
  }
  pieces_ = std::move(work);

  int total = 0;
  for (const auto& p : pieces_) total += p.dim;
  Mat dirs(k, total);
  int c = 0;
  scale_ = 0.0;
  for (const auto& p : pieces_) {
    for (int j = 0; j < p.dim; ++j) dirs.col(c++) = p.frame.col(j);
    scale_ += p.points().cwiseAbs().maxCoeff();
  }
  scale_ = std::max(scale_, 1e-300);
  span_dim_ = rank_of(dirs);
}

double FlatSum::support(const Vec& n) const {
  double s = n.dot(shift_);
  for (const auto& p : pieces_) s += p.support(n);
  return s;
}

namespace {

struct Element {
  int piece;
  int code;     // dim 1: 2 (whole); dim 2: nv + j (edge j -> j+1) or 2 nv (whole)
  Mat dirs;     // k x (1 or 2)
  Vec outward;  // edges only: outer unit normal of the edge within the polygon's plane
  double measure;
};

// Face code of a piece in direction n (see Element::code).
int face_code(const FlatPiece& p, const Vec& n, double tie_tol) {
  if (p.dim == 1) {
    const double t = p.frame.col(0).dot(n);
    if (std::abs(t) <= kDirTol) return 2;
    return t > 0 ? 1 : 0;
  }
  const int nv = static_cast<int>(p.poly.size());
  const V2 a(p.frame.col(0).dot(n), p.frame.col(1).dot(n));
  if (a.norm() <= kDirTol) return 2 * nv;
  int best = 0;
  double bv = a.dot(p.poly[0]);
  for (int i = 1; i < nv; ++i) {
    const double v = a.dot(p.poly[i]);
    if (v > bv) {
      bv = v;
      best = i;
    }
  }
  const double tol = tie_tol * a.norm();
  const int next = (best + 1) % nv, prev = (best + nv - 1) % nv;
  if (bv - a.dot(p.poly[next]) <= tol) return nv + best;
  if (bv - a.dot(p.poly[prev]) <= tol) return nv + prev;
  return best;
}

// The face of a piece for a given code, as a piece of dimension 0, 1 or 2.
FlatPiece face_piece(const FlatPiece& p, int code) {
  if (p.dim == 1) {
    if (code == 2) return p;
    FlatPiece f;
    f.dim = 0;
    f.offset = p.offset + (code == 1 ? p.hi : p.lo) * p.frame.col(0);
    return f;
  }
  const int nv = static_cast<int>(p.poly.size());
  if (code == 2 * nv) return p;
  if (code >= nv) {
    const int j = code - nv;
    return make_segment_piece(p.offset + p.frame * p.poly[j], p.offset + p.frame * p.poly[(j + 1) % nv]);
  }
  FlatPiece f;
  f.dim = 0;
  f.offset = p.offset + p.frame * p.poly[code];
  return f;
}

FlatPiece project_piece(const FlatPiece& p, const Mat& g) {
  FlatPiece q;
  q.dim = p.dim;
  q.offset = g.transpose() * p.offset;
  if (p.dim == 0) return q;
  if (p.dim == 1) {
    q.frame = g.transpose() * p.frame;
    const double n = q.frame.norm();
    q.frame /= n;
    q.lo = p.lo * n;
    q.hi = p.hi * n;
    return q;
  }
  q.frame = g.transpose() * p.frame;
  q.poly = p.poly;
  return q;
}

}  // namespace

std::vector<SumFacet> FlatSum::facets() const {
  std::vector<SumFacet> out;
  if (span_dim_ < k_) return out;
  const int np = static_cast<int>(pieces_.size());
  const double tie_tol = 1e-10 * scale_;

  if (k_ == 1) {
    for (double s : {-1.0, 1.0}) {
      Vec n = Vec::Constant(1, s);
      out.push_back({n, support(n), 1.0});
    }
    return out;
  }

  std::vector<std::vector<Element>> elems(np);
  for (int i = 0; i < np; ++i) {
    const auto& p = pieces_[i];
    if (p.dim == 1) {
      elems[i].push_back({i, 2, p.frame, Vec(), p.measure()});
    } else {
      const int nv = static_cast<int>(p.poly.size());
      elems[i].push_back({i, 2 * nv, p.frame, Vec(), p.measure()});
      for (int j = 0; j < nv; ++j) {
        const V2 d = p.poly[(j + 1) % nv] - p.poly[j];
        const V2 e = d.normalized();
        elems[i].push_back({i, nv + j, Mat(p.frame * e), p.frame * V2(e.y(), -e.x()), d.norm()});
      }
    }
  }

  std::unordered_set<std::vector<int>, KeyHash> seen;
  std::vector<const Element*> chosen;
  Mat basis(k_, k_);
  Vec r(k_);
  std::vector<int> codes(np);

  Vec n0(k_), n(k_);
  auto evaluate = [&](double product) {
    // unit normal to the chosen directions: the coordinate axis least covered by
    // the orthonormal basis, with the basis projected out
    const int rk = k_ - 1;
    int best = 0;
    double best_cov = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k_; ++j) {
      const double cov = basis.row(j).head(rk).squaredNorm();
      if (cov < best_cov) {
        best_cov = cov;
        best = j;
      }
    }
    n0.setZero();
    n0(best) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int b = 0; b < rk; ++b) n0 -= basis.col(b).dot(n0) * basis.col(b);
    n0.normalize();
    // A chosen edge is the face in direction n iff n points along its outer
    // normal; whole pieces are faces for both signs.
    int sign = 0;
    for (const Element* e : chosen) {
      if (e->outward.size() == 0) continue;
      const double t = e->outward.dot(n0);
      const int sg = t > kDirTol ? 1 : (t < -kDirTol ? -1 : 0);
      if (sg == 0 || (sign != 0 && sg != sign)) return;
      sign = sg;
    }
    for (double s : {1.0, -1.0}) {
      if (sign != 0 && s != sign) continue;
      n = s * n0;
      // Generic case: every other piece touches the facet in a vertex, so the
      // facet is the product of the chosen elements and is reached once.
      bool generic = true;
      size_t next = 0;
      for (int i = 0; i < np; ++i) {
        codes[i] = face_code(pieces_[i], n, tie_tol);
        if (next < chosen.size() && chosen[next]->piece == i) {
          ++next;
          continue;
        }
        const auto& p = pieces_[i];
        const int nv = static_cast<int>(p.poly.size());
        if ((p.dim == 1 && codes[i] == 2) || (p.dim == 2 && codes[i] >= nv)) generic = false;
      }
      if (generic) {
        out.push_back({n, support(n), product});
        continue;
      }
      if (!seen.insert(codes).second) continue;
      const Mat g = complement(Mat(n));
      std::vector<FlatPiece> local;
      for (int i = 0; i < np; ++i) local.push_back(project_piece(face_piece(pieces_[i], codes[i]), g));
      FlatSum sub(k_ - 1, local);
      if (sub.span_dim() < k_ - 1) continue;
      out.push_back({n, support(n), sub.volume()});
    }
  };

  // Depth-first choice of elements from increasing piece indices.
  // `product` is the (used)-volume of the product of the chosen elements.
  std::function<void(int, int, int, double)> choose = [&](int start, int used, int rank, double product) {
    if (used == k_ - 1) {
      evaluate(product);
      return;
    }
    for (int i = start; i < np; ++i) {
      for (const Element& e : elems[i]) {
        const int ed = static_cast<int>(e.dirs.cols());
        if (used + ed > k_ - 1) continue;
        bool indep = true;
        double factor = e.measure;
        for (int c = 0; c < ed; ++c) {
          r = e.dirs.col(c);
          for (int pass = 0; pass < 2; ++pass)
            for (int b = 0; b < rank + c; ++b) r -= basis.col(b).dot(r) * basis.col(b);
          const double nr = r.norm();
          if (nr <= kSpanTol) {
            indep = false;
            break;
          }
          basis.col(rank + c) = r / nr;
          factor *= nr;
        }
        if (!indep) continue;
        chosen.push_back(&e);
        choose(i + 1, used + ed, rank + ed, product * factor);
        chosen.pop_back();
      }
    }
  };
  choose(0, 0, 0, 1.0);
  return out;
}

double FlatSum::volume() const {
  if (span_dim_ < k_) return 0.0;
  if (k_ == 1) {
    double s = 0.0;
    for (const auto& p : pieces_) s += p.measure();
    return s;
  }
  int total = 0;
  for (const auto& p : pieces_) total += p.dim;
  if (total == k_) {
    // independent summands: the sum is affinely a product
    Mat frames(k_, k_);
    double prod = 1.0;
    int c = 0;
    for (const auto& p : pieces_) {
      frames.middleCols(c, p.dim) = p.frame;
      c += p.dim;
      prod *= p.measure();
    }
    return prod * std::abs(frames.determinant());
  }
  if (k_ == 2) {
    PlanarBody acc = PlanarBody::point();
    for (const auto& p : pieces_) {
      std::vector<V2> pts;
      const Mat pk = p.points();
      for (int i = 0; i < pk.cols(); ++i) pts.push_back(pk.col(i));
      acc = minkowski_sum(acc, PlanarBody::from_points(pts));
    }
    return acc.area();
  }
  Vec c = shift_;
  for (const auto& p : pieces_) c += p.points().rowwise().mean();
  double vol = 0.0;
  for (const auto& f : facets()) vol += (f.offset - f.normal.dot(c)) * f.measure;
  return vol / k_;
}

Polytope FlatSum::materialize(int batch) const {
  Mat acc = Mat(shift_);
  int count = 0;
  for (const auto& p : pieces_) {
    const Mat pts = p.points();
    Mat next(k_, acc.cols() * pts.cols());
    for (int i = 0; i < acc.cols(); ++i)
      for (int j = 0; j < pts.cols(); ++j) next.col(i * pts.cols() + j) = acc.col(i) + pts.col(j);
    acc = std::move(next);
    if (++count % batch == 0 || acc.cols() > 4096) acc = Polytope::from_points(acc, true).vertices();
  }
  return Polytope::from_points(acc, true);
}

}  // namespace cpb
