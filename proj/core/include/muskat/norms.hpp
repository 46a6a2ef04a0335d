#pragma once

#include "muskat/grid.hpp"

namespace muskat {

/// The norm hierarchy on uniformly local spaces:
///
///   TildeL2          sup_x ||g||_{L2([x-1,x+1])}
///   TildeHk(k)       sum_{j<=k} TildeL2(g^(j))
///   DdotC(alpha)     sup_{|x-y|>=1} |g(x)-g(y)|/|x-y|^alpha
///   TildeHkGamma     TildeHk(k-1) of g'  +  DdotC(1-gamma) of g
///   CkGammaHolder    sum_{j<=k} sup|g^(j)|  +  full Holder seminorm of g^(k)
///   CkGammaGamma     CkGammaHolder(k-1,gamma) of g'  +  DdotC(1-gamma) of g
///   CkGamma          sum_{1<=j<=k} sup|g^(j)|  +  DdotC(1-gamma) of g
///   TildeL2Mu(mu)    TildeL2 of sqrt(1+(mu-|x|)_+) g
///   TildeL2X0(x0)    [ integral g^2 min{1, |x-x0|^-2} ]^(1/2)
///
/// Sup-type scans are strided (see holder_seminorm) and windows use
/// trapezoid prefix sums, so values carry the documented discretization
/// error; all consumers budget for it.
struct NormKind {
  enum class Tag {
    TildeL2,
    TildeHk,
    DdotC,
    TildeHkGamma,
    CkGammaHolder,
    CkGammaGamma,
    CkGamma,
    TildeL2Mu,
    TildeL2X0
  };
  Tag tag = Tag::TildeL2;
  int k = 0;
  double alpha = 0.0;  // Holder exponent for DdotC / CkGammaHolder
  double gamma = 0.0;
  double mu = 0.0;
  double x0 = 0.0;

  static NormKind tilde_l2() { return {Tag::TildeL2, 0, 0, 0, 0, 0}; }
  static NormKind tilde_hk(int k) { return {Tag::TildeHk, k, 0, 0, 0, 0}; }
  static NormKind ddot_c(double alpha) { return {Tag::DdotC, 0, alpha, 0, 0, 0}; }
  static NormKind tilde_hk_gamma(int k, double gamma) {
    return {Tag::TildeHkGamma, k, 0, gamma, 0, 0};
  }
  static NormKind ck_gamma_holder(int k, double gamma) {
    return {Tag::CkGammaHolder, k, gamma, 0, 0, 0};
  }
  static NormKind ck_gamma_gamma(int k, double gamma) {
    return {Tag::CkGammaGamma, k, 0, gamma, 0, 0};
  }
  static NormKind ck_gamma(int k, double gamma) { return {Tag::CkGamma, k, 0, gamma, 0, 0}; }
  static NormKind tilde_l2_mu(double mu) { return {Tag::TildeL2Mu, 0, 0, 0, mu, 0}; }
  static NormKind tilde_l2_x0(double x0) { return {Tag::TildeL2X0, 0, 0, 0, 0, x0}; }
};

double local_norm(const GridFunction& g, const NormKind& kind);

/// sup over window centers of the L2 norm on [x-1, x+1] (length-2 windows,
/// wrapped periodically); needs dx <= 0.25 and L >= 1.
double windowed_l2_sup(const GridFunction& g);

/// Pair-difference seminorm sup |g(x)-g(y)|/|x-y|^alpha over torus distances
/// in [min_distance, L].  Lag stride: every lag up to 64 past the smallest
/// admissible one, then geometric with ratio 17/16, plus the lag n/2.
double holder_seminorm(const GridFunction& g, double alpha, double min_distance);

/// Hardy-Littlewood maximal function restricted to dyadic radii
/// {dx, 2dx, 4dx, ..., L}: within a factor 2 of the all-radii sup.
GridFunction maximal_function(const GridFunction& g);

}  // namespace muskat
