#include "groupmix/action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupmix/matrix_group.hpp"

namespace groupmix {

namespace {

bool is_permutation_kind(GroupKind k) {
  return k == GroupKind::symmetric || k == GroupKind::alternating ||
         k == GroupKind::signed_permutation;
}

}  // namespace

ActionView::ActionView(GroupPtr group, ActionKind kind, std::vector<Elem> subgroup,
                       std::int64_t bound)
    : group_(std::move(group)), kind_(kind), bound_(bound), subgroup_(std::move(subgroup)) {
  switch (kind_) {
    case ActionKind::natural:
      if (group_->kind() == GroupKind::matrix || group_->kind() == GroupKind::cayley ||
          group_->kind() == GroupKind::product)
        throw std::invalid_argument("no natural action for this group kind");
      break;
    case ActionKind::pairs:
      if (group_->kind() == GroupKind::matrix) break;
      if (!is_permutation_kind(group_->kind()))
        throw std::invalid_argument("pairs action needs a permutation or matrix group");
      break;
    case ActionKind::projective_line:
      if (group_->kind() != GroupKind::matrix)
        throw std::invalid_argument("projective action needs a matrix group");
      break;
    case ActionKind::cosets: {
      if (subgroup_.empty()) throw std::invalid_argument("coset action needs a subgroup");
      if (!is_subgroup(*group_, subgroup_))
        throw std::invalid_argument("coset action: the given set is not a subgroup");
      // Precompute coset representatives for the whole group.
      std::vector<Elem> all = group_->enumerate(bound_);
      ElemSet placed;
      for (const auto& x : all) {
        if (placed.count(x)) continue;
        std::vector<Elem> coset;
        Elem rep = group_->multiply(x, subgroup_.front());
        for (const auto& h : subgroup_) {
          Elem m = group_->multiply(x, h);
          if (m < rep) rep = m;
          coset.push_back(std::move(m));
        }
        for (auto& m : coset) {
          placed.insert(m);
          coset_rep_.emplace(std::move(m), rep);
        }
        coset_points_.push_back(std::move(rep));
      }
      std::sort(coset_points_.begin(), coset_points_.end());
      break;
    }
  }
}

int ActionView::natural_degree() const {
  switch (group_->kind()) {
    case GroupKind::symmetric:
    case GroupKind::alternating:
      return static_cast<const SymmetricGroup&>(*group_).n();
    case GroupKind::signed_permutation:
      return static_cast<const SignedPermGroup&>(*group_).n();
    case GroupKind::cyclic:
      return static_cast<int>(static_cast<const CyclicGroup&>(*group_).n());
    case GroupKind::dihedral:
      return static_cast<int>(static_cast<const DihedralGroup&>(*group_).n());
    default:
      throw std::logic_error("no natural degree");
  }
}

std::int64_t ActionView::size() const {
  switch (kind_) {
    case ActionKind::natural:
      return natural_degree();
    case ActionKind::pairs: {
      if (group_->kind() == GroupKind::matrix) {
        const auto& mg = static_cast<const MatrixGroup&>(*group_);
        std::int64_t np = static_cast<std::int64_t>(mg.projective_points().size());
        return np * (np - 1);
      }
      std::int64_t n = natural_degree();
      return n * (n - 1) / 2;
    }
    case ActionKind::projective_line:
      return static_cast<std::int64_t>(
          static_cast<const MatrixGroup&>(*group_).projective_points().size());
    case ActionKind::cosets:
      return static_cast<std::int64_t>(coset_points_.size());
  }
  return 0;
}

std::vector<Point> ActionView::points() const {
  std::vector<Point> out;
  switch (kind_) {
    case ActionKind::natural: {
      int n = natural_degree();
      bool zero_based =
          group_->kind() == GroupKind::cyclic || group_->kind() == GroupKind::dihedral;
      for (int i = 0; i < n; ++i)
        out.push_back(Elem({static_cast<std::int32_t>(zero_based ? i : i + 1)}));
      break;
    }
    case ActionKind::pairs: {
      if (group_->kind() == GroupKind::matrix) {
        const auto& mg = static_cast<const MatrixGroup&>(*group_);
        auto pts = mg.projective_points();
        for (const auto& x : pts)
          for (const auto& y : pts) {
            if (x == y) continue;
            Point p;
            for (auto c : x) p.v.push_back(static_cast<std::int32_t>(c));
            for (auto c : y) p.v.push_back(static_cast<std::int32_t>(c));
            out.push_back(std::move(p));
          }
        std::sort(out.begin(), out.end());
        break;
      }
      int n = natural_degree();
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Elem({i, j}));
      break;
    }
    case ActionKind::projective_line: {
      const auto& mg = static_cast<const MatrixGroup&>(*group_);
      for (const auto& x : mg.projective_points()) {
        Point p;
        for (auto c : x) p.v.push_back(static_cast<std::int32_t>(c));
        out.push_back(std::move(p));
      }
      break;
    }
    case ActionKind::cosets:
      out = coset_points_;
      break;
  }
  return out;
}

Point ActionView::natural_apply(const Elem& g, std::int64_t x) const {
  switch (group_->kind()) {
    case GroupKind::symmetric:
    case GroupKind::alternating:
      return Elem({g.v[x - 1]});
    case GroupKind::signed_permutation:
      return Elem({g.v[x - 1]});  // underlying permutation action
    case GroupKind::cyclic: {
      auto n = static_cast<const CyclicGroup&>(*group_).n();
      return Elem({static_cast<std::int32_t>((g.v[0] + x) % n)});
    }
    case GroupKind::dihedral: {
      auto n = static_cast<const DihedralGroup&>(*group_).n();
      std::int64_t y = g.v[1] ? (g.v[0] - x) : (g.v[0] + x);
      return Elem({static_cast<std::int32_t>(((y % n) + n) % n)});
    }
    default:
      throw std::logic_error("no natural action");
  }
}

Point ActionView::apply(const Elem& g, const Point& x) const {
  switch (kind_) {
    case ActionKind::natural:
      return natural_apply(g, x.v[0]);
    case ActionKind::pairs: {
      if (group_->kind() == GroupKind::matrix) {
        const auto& mg = static_cast<const MatrixGroup&>(*group_);
        int d = mg.d();
        MatrixGroup::ProjPoint a(x.v.begin(), x.v.begin() + d);
        MatrixGroup::ProjPoint b(x.v.begin() + d, x.v.end());
        auto ga = mg.apply_to_point(g, a);
        auto gb = mg.apply_to_point(g, b);
        Point p;
        for (auto c : ga) p.v.push_back(static_cast<std::int32_t>(c));
        for (auto c : gb) p.v.push_back(static_cast<std::int32_t>(c));
        return p;
      }
      std::int32_t i = natural_apply(g, x.v[0]).v[0];
      std::int32_t j = natural_apply(g, x.v[1]).v[0];
      if (i > j) std::swap(i, j);
      return Elem({i, j});
    }
    case ActionKind::projective_line: {
      const auto& mg = static_cast<const MatrixGroup&>(*group_);
      MatrixGroup::ProjPoint a(x.v.begin(), x.v.end());
      auto ga = mg.apply_to_point(g, a);
      Point p;
      for (auto c : ga) p.v.push_back(static_cast<std::int32_t>(c));
      return p;
    }
    case ActionKind::cosets: {
      Elem gx = group_->multiply(g, x);
      auto it = coset_rep_.find(gx);
      if (it == coset_rep_.end()) throw std::logic_error("coset action: element not indexed");
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

void ActionView::validate_point(const Point& x) const {
  switch (kind_) {
    case ActionKind::natural: {
      int n = natural_degree();
      bool zero_based =
          group_->kind() == GroupKind::cyclic || group_->kind() == GroupKind::dihedral;
      std::int64_t lo = zero_based ? 0 : 1, hi = zero_based ? n - 1 : n;
      if (x.v.size() != 1 || x.v[0] < lo || x.v[0] > hi)
        throw std::invalid_argument("invalid natural action point");
      return;
    }
    case ActionKind::pairs: {
      if (group_->kind() == GroupKind::matrix) {
        const auto& mg = static_cast<const MatrixGroup&>(*group_);
        int d = mg.d();
        if (static_cast<int>(x.v.size()) != 2 * d)
          throw std::invalid_argument("invalid projective pair point");
        MatrixGroup::ProjPoint a(x.v.begin(), x.v.begin() + d);
        MatrixGroup::ProjPoint b(x.v.begin() + d, x.v.end());
        if (mg.normalize_point(a) != a || mg.normalize_point(b) != b || a == b)
          throw std::invalid_argument("projective pair must be two distinct normalized points");
        return;
      }
      int n = natural_degree();
      if (x.v.size() != 2 || x.v[0] < 1 || x.v[1] <= x.v[0] || x.v[1] > n)
        throw std::invalid_argument("invalid pair point");
      return;
    }
    case ActionKind::projective_line: {
      const auto& mg = static_cast<const MatrixGroup&>(*group_);
      if (static_cast<int>(x.v.size()) != mg.d())
        throw std::invalid_argument("invalid projective point");
      MatrixGroup::ProjPoint a(x.v.begin(), x.v.end());
      if (mg.normalize_point(a) != a)
        throw std::invalid_argument("projective point is not normalized");
      return;
    }
    case ActionKind::cosets: {
      auto it = coset_rep_.find(x);
      if (it == coset_rep_.end() || !(it->second == x))
        throw std::invalid_argument("point is not a canonical coset representative");
      return;
    }
  }
}

bool ActionView::is_two_transitive() const {
  auto pts = points();
  if (pts.size() < 2) return false;
  auto all = group_->enumerate(bound_);
  std::set<std::pair<Point, Point>> orbit;
  const Point &x0 = pts[0], &y0 = pts[1];
  for (const auto& g : all) orbit.emplace(apply(g, x0), apply(g, y0));
  return orbit.size() == pts.size() * (pts.size() - 1);
}

ActionView action_for_claim(const GroupPtr& group, const Claim& claim, std::int64_t bound) {
  if (claim.is_group) throw std::invalid_argument("claim is a group claim, not an action claim");
  return ActionView(group, claim.action, claim.subgroup, bound);
}

}  // namespace groupmix
