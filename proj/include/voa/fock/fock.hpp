#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "voa/core/partitions.hpp"
#include "voa/fock/graded_field.hpp"

namespace voa::fock {

/// Combination of a_{-l1} ... a_{-lk} |eta>, keyed by the partition l.
using FockVector = std::map<Partition, Rational>;

/// Heisenberg mode a_n, or the central K when `central` is set.
struct HeisenbergMode {
  int n = 0;
  bool central = false;
};

/// a_n acting on F^eta: creation for n < 0, contraction by [a_m, a_n] = m delta_{m+n,0} K for n > 0,
/// eta for n = 0; K acts as 1.
FockVector heis_act(const HeisenbergMode& mode, const FockVector& v, const Rational& eta = 0);
FockVector heis_act(int n, const FockVector& v, const Rational& eta = 0);

/// Basis of the degree-d part of F^eta (partitions of d, descending lexicographic).
const std::vector<Partition>& fock_basis(int degree);
QMatrix heis_matrix(int n, int degree, const Rational& eta = 0);
QVector fock_coordinates(const FockVector& v, int degree);
FockVector fock_vector(const QVector& coords, int degree);

/// Normal ordering of the pair a_k a_l: returns the factors in application order
/// (left factor first): a_l a_k when l = -k and k >= 0, otherwise a_k a_l.
std::pair<int, int> normal_order(int k, int l);

/// sum_{k+l=n} :a_k a_l: applied to v; the sum is finite on each vector.
FockVector normal_ordered_square(int n, const FockVector& v, const Rational& eta = 0);

/// Translation operator on F^0: T|0> = 0 and [T, a_{-m}] = m a_{-m-1}.
FockVector translation(const FockVector& v);

using TranslationFn = std::function<FockVector(const FockVector&)>;

/// Checks T|0> = 0 and [T, A_(n)] = -n A_(n-1) for A = a_{-1}|0> (and, when given, further
/// fields) for |n| <= degree_cap on every basis vector of degree <= degree_cap.
AxiomReport check_translation_axiom(int degree_cap, const TranslationFn& T = translation,
                                    const std::vector<GradedField>& extra_fields = {});

/// Y(v, z) for v a combination of monomials with at most two creation factors, all of one degree.
/// a_{-p}|0> gives the (p-1)-st divided derivative of a(z); a_{-p} a_{-q}|0> the normally ordered product.
GradedField fock_vertex_operator(const FockVector& v);

std::string to_string(const FockVector& v);
Json to_json(const FockVector& v);

}  // namespace voa::fock
