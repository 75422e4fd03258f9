#pragma once

#include <map>
#include <vector>

#include "perichain/error.hpp"
#include "perichain/scalar.hpp"

namespace perichain {

/// Square sparse matrix over an exact coefficient ring S. Rows are ordered
/// maps column -> value; explicit zeros are never stored. Twist operators on
/// V^{otimes 3} stay very sparse even for sl(7)/sl(8), which is what makes the
/// whole verification programme cheap.
template <class S>
class SparseMat {
public:
    SparseMat() : n_(0) {}
    explicit SparseMat(int n) : n_(n), rows_(n) {}

    static SparseMat identity(int n) {
        SparseMat m(n);
        for (int i = 0; i < n; ++i) m.rows_[i].emplace(i, S(1));
        return m;
    }

    int n() const { return n_; }

    const std::map<int, S>& row(int i) const { return rows_[i]; }

    void set(int i, int j, const S& v) {
        if (v == S(0))
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }

    void add_to(int i, int j, const S& v) {
        auto it = rows_[i].find(j);
        if (it == rows_[i].end()) {
            if (!(v == S(0))) rows_[i].emplace(j, v);
            return;
        }
        it->second += v;
        if (it->second == S(0)) rows_[i].erase(it);
    }

    S get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? S(0) : it->second;
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i) {
            if (rows_[i].size() != 1) return false;
            const auto& [j, v] = *rows_[i].begin();
            if (j != i || !(v == S(1))) return false;
        }
        return true;
    }

    long nnz() const {
        long c = 0;
        for (const auto& r : rows_) c += static_cast<long>(r.size());
        return c;
    }

    SparseMat operator-() const {
        SparseMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) m.rows_[i].emplace(j, -v);
        return m;
    }

    SparseMat& operator+=(const SparseMat& o) {
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : o.rows_[i]) add_to(i, j, v);
        return *this;
    }
    SparseMat& operator-=(const SparseMat& o) {
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : o.rows_[i]) add_to(i, j, -v);
        return *this;
    }

    friend SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
    friend SparseMat operator-(SparseMat a, const SparseMat& b) { return a -= b; }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        SparseMat c(a.n_);
        for (int i = 0; i < a.n_; ++i) {
            for (const auto& [k, av] : a.rows_[i]) {
                for (const auto& [j, bv] : b.rows_[k]) c.add_to(i, j, av * bv);
            }
        }
        return c;
    }

    SparseMat scaled(const S& c) const {
        SparseMat m(n_);
        if (c == S(0)) return m;
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) m.set(i, j, c * v);
        return m;
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    /// exp(T) as a finite series; throws NotNilpotent when the series fails
    /// to terminate within the ring's cap.
    SparseMat exp_nilpotent() const {
        SparseMat result = identity(n_);
        SparseMat term = identity(n_);
        unsigned cap = ScalarTraits<S>::series_cap(static_cast<unsigned>(n_));
        for (unsigned m = 1; m <= cap; ++m) {
            term = term * *this;
            term = term.scaled(ScalarTraits<S>::from_rational(Rational(1, (long long)m)));
            if (term.is_zero()) return result;
            result += term;
        }
        throw NotNilpotent("exp series did not terminate");
    }

    /// log(1 + T) as a finite series, same termination rule as exp_nilpotent.
    SparseMat log1p_nilpotent() const {
        SparseMat result(n_);
        SparseMat power = identity(n_);
        unsigned cap = ScalarTraits<S>::series_cap(static_cast<unsigned>(n_));
        for (unsigned m = 1; m <= cap; ++m) {
            power = power * *this;
            if (power.is_zero()) return result;
            Rational c(m % 2 == 1 ? 1 : -1, (long long)m);
            result += power.scaled(ScalarTraits<S>::from_rational(c));
        }
        throw NotNilpotent("log(1+T) series did not terminate");
    }

    /// Conjugation by an index permutation: entry (i,j) moves to (p[i], p[j]).
    SparseMat permuted(const std::vector<int>& p) const {
        SparseMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) m.rows_[p[i]].emplace(p[j], v);
        return m;
    }

    /// Exact Gauss-Jordan inverse, pivoting on unit entries (over a jet ring
    /// an entry is a pivot candidate iff its constant term is nonzero).
    SparseMat inverse() const {
        std::vector<std::map<int, S>> a = rows_;
        SparseMat inv = identity(n_);
        std::vector<bool> used(n_, false);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = 0; r < n_; ++r) {
                if (used[r]) continue;
                auto it = a[r].find(col);
                if (it != a[r].end() && ScalarTraits<S>::is_unit(it->second)) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) throw Singular("matrix inverse: no unit pivot in column");
            used[pivot] = true;
            S piv_inv = ScalarTraits<S>::inverse(a[pivot][col]);
            scale_row(a[pivot], piv_inv);
            scale_row(inv.rows_[pivot], piv_inv);
            for (int r = 0; r < n_; ++r) {
                if (r == pivot) continue;
                auto it = a[r].find(col);
                if (it == a[r].end()) continue;
                S factor = it->second;
                axpy_row(a[r], a[pivot], factor);
                axpy_row(inv.rows_[r], inv.rows_[pivot], factor);
            }
        }
        // rows are now a permutation of the identity; undo it
        SparseMat result(n_);
        std::vector<std::map<int, S>> id_rows = std::move(a);
        for (int r = 0; r < n_; ++r) {
            int col = id_rows[r].begin()->first;
            result.rows_[col] = std::move(inv.rows_[r]);
        }
        return result;
    }

private:
    static void scale_row(std::map<int, S>& row, const S& c) {
        for (auto& [j, v] : row) v *= c;
    }
    // row -= factor * src
    static void axpy_row(std::map<int, S>& row, const std::map<int, S>& src, const S& factor) {
        for (const auto& [j, v] : src) {
            auto it = row.find(j);
            if (it == row.end()) {
                S nv = -(factor * v);
                if (!(nv == S(0))) row.emplace(j, nv);
            } else {
                it->second -= factor * v;
                if (it->second == S(0)) row.erase(it);
            }
        }
    }

    int n_;
    std::vector<std::map<int, S>> rows_;
};

} // namespace perichain
