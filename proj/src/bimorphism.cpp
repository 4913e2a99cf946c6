#include "qtriad/bimorphism.hpp"

#include <string>

#include "qtriad/kernel.hpp"

namespace qtriad {

Bimorphism Bimorphism::from_table(LatticePtr x, LatticePtr y, LatticePtr z,
                                  std::vector<Elem> table, const Limits&) {
  if (table.size() != x->size() * y->size())
    throw InputError("bimorphism table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(x->size() * y->size()));
  for (Elem v : table)
    if (v >= z->size()) throw InputError("bimorphism value out of range");
  Bimorphism b;
  b.x_ = std::move(x);
  b.y_ = std::move(y);
  b.z_ = std::move(z);
  b.table_ = std::move(table);
  return b;
}

Bimorphism Bimorphism::from_generators(LatticePtr x, LatticePtr y, LatticePtr z,
                                       std::vector<Elem> gen, const Limits& limits) {
  const std::size_t kx = x->ji_count(), ky = y->ji_count();
  if (gen.size() != kx * ky) throw InputError("generator table has the wrong shape");
  for (Elem v : gen)
    if (v >= z->size()) throw InputError("generator value out of range");
  Bimorphism b;
  b.generated_ = true;
  b.x_ = std::move(x);
  b.y_ = std::move(y);
  b.z_ = std::move(z);
  b.gen_ = std::move(gen);
  const auto& X = *b.x_;
  const auto& Y = *b.y_;
  const auto& Z = *b.z_;
  b.rows_.assign(X.size() * ky, Z.bottom());
  for (Elem a : X.build_order()) {
    if (a == X.bottom()) continue;
    const auto [a0, p] = X.split(a);
    for (std::size_t q = 0; q < ky; ++q)
      b.rows_[a * ky + q] = Z.join(b.rows_[a0 * ky + q], b.gen_[p * ky + q]);
  }
  if (X.size() * Y.size() <= limits.dense_products) {
    const std::size_t ny = Y.size();
    b.table_.assign(X.size() * ny, Z.bottom());
#pragma omp parallel for schedule(static)
    for (Elem a = 0; a < X.size(); ++a)
      for (Elem c : Y.build_order()) {
        if (c == Y.bottom()) continue;
        const auto [c0, q] = Y.split(c);
        b.table_[a * ny + c] = Z.join(b.table_[a * ny + c0], b.rows_[a * ky + q]);
      }
  }
  return b;
}

Elem Bimorphism::operator()(Elem a, Elem b) const {
  if (!table_.empty()) return table_[a * y_->size() + b];
  const std::size_t ky = y_->ji_count();
  Elem acc = z_->bottom();
  for (auto q : y_->down_list(b)) acc = z_->join(acc, rows_[a * ky + q]);
  return acc;
}

Violations Bimorphism::verify() const { return generated_ ? verify_generated() : verify_table(); }

Violations Bimorphism::verify_table() const {
  const auto& X = *x_;
  const auto& Y = *y_;
  const auto& Z = *z_;
  const auto& f = *this;
  Violations out;
  const auto xs = kernel::all_elements(X.size());
  const auto ys = kernel::all_elements(Y.size());
  if (auto w = kernel::first_failure(ys, [&](Elem b) { return f(X.bottom(), b) == Z.bottom(); }))
    out.push_back({"ZeroAnnihilation", "left", {*w}, "0*y != 0"});
  if (auto w = kernel::first_failure(xs, [&](Elem a) { return f(a, Y.bottom()) == Z.bottom(); }))
    out.push_back({"ZeroAnnihilation", "right", {*w}, "x*0 != 0"});

  const auto& jy = Y.join_irreducibles();
  const auto& jx = X.join_irreducibles();
  // x(y v j) = xy v xj over all x, y and join-irreducible j.
  if (auto w = kernel::first_failure(xs, ys, jy, [&](Elem a, Elem b, Elem j) {
        return f(a, Y.join(b, j)) == Z.join(f(a, b), f(a, j));
      }))
    out.push_back({"JoinDistribution", "right", {(*w)[0], (*w)[1], (*w)[2]}, "x(y v j) != xy v xj"});
  if (auto w = kernel::first_failure(ys, xs, jx, [&](Elem b, Elem a, Elem j) {
        return f(X.join(a, j), b) == Z.join(f(a, b), f(j, b));
      }))
    out.push_back({"JoinDistribution", "left", {(*w)[1], (*w)[2], (*w)[0]}, "(x v j)y != xy v jy"});
  return out;
}

Violations Bimorphism::verify_generated() const {
  const auto& X = *x_;
  const auto& Y = *y_;
  const auto& Z = *z_;
  const std::size_t kx = X.ji_count(), ky = Y.ji_count();
  const auto& jx = X.join_irreducibles();
  const auto& jy = Y.join_irreducibles();
  Violations out;
  const auto ys = kernel::all_elements(Y.size());
  const auto xs = kernel::all_elements(X.size());

  // Each generator row h_p(y) = F(j_p, y) must preserve joins in y.
  const std::size_t ny = Y.size();
  std::vector<Elem> rows_y(kx * ny);
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < kx; ++p)
    for (Elem c = 0; c < ny; ++c) {
      Elem acc = Z.bottom();
      for (auto q : Y.down_list(c)) acc = Z.join(acc, gen_[p * ky + q]);
      rows_y[p * ny + c] = acc;
    }
  auto h = [&](std::size_t p, Elem c) { return rows_y[p * ny + c]; };
  for (std::size_t p = 0; p < kx && out.empty(); ++p) {
    if (auto w = kernel::first_failure(ys, [&](Elem c) {
          for (std::size_t q = 0; q < ky; ++q)
            if (h(p, Y.join_ji(c, q)) != Z.join(h(p, c), gen_[p * ky + q])) return false;
          return true;
        })) {
      Elem bad_q = 0;
      for (std::size_t q = 0; q < ky; ++q)
        if (h(p, Y.join_ji(*w, q)) != Z.join(h(p, *w), gen_[p * ky + q])) {
          bad_q = jy[q];
          break;
        }
      out.push_back({"JoinDistribution", "right", {jx[p], *w, bad_q}, "generated extension"});
    }
  }
  // F(x v j, -) = F(x, -) v F(j, -), compared on the join-irreducibles of Y
  // (both sides preserve joins in the second argument once the check above passes).
  if (auto w = kernel::first_failure(xs, [&](Elem a) {
        for (std::size_t p = 0; p < kx; ++p) {
          const Elem ap = X.join_ji(a, p);
          for (std::size_t q = 0; q < ky; ++q)
            if (rows_[ap * ky + q] != Z.join(rows_[a * ky + q], rows_[jx[p] * ky + q])) return false;
        }
        return true;
      })) {
    std::vector<Elem> wit{*w};
    for (std::size_t p = 0; p < kx && wit.size() == 1; ++p)
      for (std::size_t q = 0; q < ky; ++q)
        if (rows_[X.join_ji(*w, p) * ky + q] != Z.join(rows_[*w * ky + q], rows_[jx[p] * ky + q])) {
          wit.push_back(jx[p]);
          wit.push_back(jy[q]);
          break;
        }
    out.push_back({"JoinDistribution", "left", wit, "generated extension"});
  }
  return out;
}

std::vector<Elem> Bimorphism::table(std::size_t max_pairs) const {
  if (!table_.empty()) return table_;
  const std::size_t nx = x_->size(), ny = y_->size();
  if (nx * ny > max_pairs)
    throw SearchSpaceExceeded("bimorphism table with " + std::to_string(nx * ny) + " entries");
  std::vector<Elem> t(nx * ny);
  for (Elem a = 0; a < nx; ++a)
    for (Elem b = 0; b < ny; ++b) t[a * ny + b] = (*this)(a, b);
  return t;
}

}  // namespace qtriad
