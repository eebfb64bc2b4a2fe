#pragma once

#include <array>
#include <complex>
#include <cstdlib>
#include <stdexcept>

#include "sl3cv/exact_complex.hpp"
#include "sl3cv/word.hpp"

namespace sl3cv {

template <typename T>
struct Mat3 {
  std::array<T, 9> e{};  // row-major

  T& at(int r, int c) { return e[3 * r + c]; }
  const T& at(int r, int c) const { return e[3 * r + c]; }

  static Mat3 zero() { return {}; }
  static Mat3 identity() {
    Mat3 m;
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = T(1);
    return m;
  }
  static Mat3 diag(const T& a, const T& b, const T& c) {
    Mat3 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    return m;
  }

  friend Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = -x.e[i];
    return r;
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = x.at(i, 0) * y.at(0, j);
        s += x.at(i, 1) * y.at(1, j);
        s += x.at(i, 2) * y.at(2, j);
        r.at(i, j) = s;
      }
    return r;
  }
  friend Mat3 operator*(const T& c, const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = c * x.e[i];
    return r;
  }
  friend bool operator==(const Mat3&, const Mat3&) = default;

  Mat3 pow(long k) const {
    Mat3 r = identity();
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
  }
};

template <typename T>
T trace(const Mat3<T>& m) {
  return m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
}

template <typename T>
T det(const Mat3<T>& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

// transpose of the cofactor matrix; m · adjugate(m) = det(m) · I, and for
// det = 1 this is the inverse
template <typename T>
Mat3<T> adjugate(const Mat3<T>& m) {
  Mat3<T> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;  // adjugate transposes: minor of (j,i)
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a.at(i, j) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
    }
  return a;
}

using ExactMat3 = Mat3<ExactComplex>;
using ApproxMat3 = Mat3<std::complex<double>>;

inline ApproxMat3 to_approx(const ExactMat3& m) {
  ApproxMat3 r;
  for (int i = 0; i < 9; ++i) r.e[i] = m.e[i].to_complex();
  return r;
}

struct NonUnimodularError : std::runtime_error {
  char which;
  explicit NonUnimodularError(char w)
      : std::runtime_error(std::string("matrix ") + w + " does not have determinant 1"),
        which(w) {}
};

// pair of exact matrices with determinant exactly 1
struct SL3Pair {
  ExactMat3 A, B;
  SL3Pair(ExactMat3 a, ExactMat3 b) : A(std::move(a)), B(std::move(b)) {
    if (det(A) != ExactComplex(1)) throw NonUnimodularError('A');
    if (det(B) != ExactComplex(1)) throw NonUnimodularError('B');
  }
};

// product of letter images; inverse letters use the adjugate, so both input
// matrices must have determinant 1
template <typename T>
Mat3<T> evaluate_word(const Word& w, const Mat3<T>& A, const Mat3<T>& B) {
  Mat3<T> invA = adjugate(A), invB = adjugate(B);
  Mat3<T> r = Mat3<T>::identity();
  for (const Letter& l : w.letters()) {
    const Mat3<T>& base = l.exp > 0 ? (l.gen == 1 ? A : B) : (l.gen == 1 ? invA : invB);
    for (long i = 0; i < std::labs(l.exp); ++i) r = r * base;
  }
  return r;
}

inline ExactMat3 evaluate_word(const Word& w, const SL3Pair& p) {
  return evaluate_word(w, p.A, p.B);
}

// the nine trace coordinates of a determinant-1 pair, in variable order:
// tr A, tr A⁻¹, tr B, tr B⁻¹, tr AB, tr A⁻¹B⁻¹, tr AB⁻¹, tr A⁻¹B, tr ABA⁻¹B⁻¹
template <typename T>
std::array<T, 9> trace_coordinates(const Mat3<T>& A, const Mat3<T>& B) {
  Mat3<T> iA = adjugate(A), iB = adjugate(B);
  return {trace(A),      trace(iA),      trace(B),      trace(iB),     trace(A * B),
          trace(iA * iB), trace(A * iB), trace(iA * B), trace(A * B * iA * iB)};
}

// [[a,b,0],[c,d,0],[0,0,1/(ad−bc)]]; determinant 1 by construction
inline ExactMat3 embed_gl2(const ExactComplex& a, const ExactComplex& b, const ExactComplex& c,
                           const ExactComplex& d) {
  ExactComplex dd = a * d - b * c;
  if (dd.is_zero()) throw std::domain_error("embed_gl2: ad - bc = 0");
  ExactMat3 m;
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  m.at(2, 2) = dd.inverse();
  return m;
}

// diag(a, b, 1/ab)
inline ExactMat3 embed_diag(const ExactComplex& a, const ExactComplex& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("embed_diag: zero entry");
  return ExactMat3::diag(a, b, (a * b).inverse());
}

}  // namespace sl3cv
