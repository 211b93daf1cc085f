// Copyright 2026 The combs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "combs/errors.hpp"

namespace combs {

// Semiring policies for dense matrices.

struct BooleanRing {
  using Scalar = std::uint8_t;
  static constexpr const char* name = "boolean";
  static constexpr bool finite = true;
  static constexpr bool exact = true;
  static Scalar zero() { return 0; }
  static Scalar one() { return 1; }
  static Scalar add(Scalar a, Scalar b) { return a | b; }
  static Scalar mul(Scalar a, Scalar b) { return a & b; }
  static Scalar conj(Scalar a) { return a; }
  static double distance(Scalar a, Scalar b) { return a == b ? 0.0 : 1.0; }
  static nlohmann::json to_json(Scalar a) { return int(a); }
  static Scalar from_json(const nlohmann::json& j) {
    if (j.is_boolean()) return j.get<bool>() ? 1 : 0;
    if (j.is_number_integer()) {
      auto v = j.get<long long>();
      if (v == 0 || v == 1) return Scalar(v);
    }
    fail(ErrorKind::ParseError, "boolean entry must be 0 or 1, got " + j.dump());
  }
};

struct ComplexRing {
  using Scalar = std::complex<double>;
  static constexpr const char* name = "complex";
  static constexpr bool finite = false;
  static constexpr bool exact = false;
  static Scalar zero() { return 0.0; }
  static Scalar one() { return 1.0; }
  static Scalar add(Scalar a, Scalar b) { return a + b; }
  static Scalar mul(Scalar a, Scalar b) { return a * b; }
  static Scalar conj(Scalar a) { return std::conj(a); }
  static double distance(Scalar a, Scalar b) { return std::abs(a - b); }
  static nlohmann::json to_json(Scalar a) {
    if (a.imag() == 0.0) return a.real();
    return nlohmann::json::array({a.real(), a.imag()});
  }
  static Scalar from_json(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
      return {j[0].get<double>(), j[1].get<double>()};
    fail(ErrorKind::ParseError,
         "complex entry must be a number or [re, im], got " + j.dump());
  }
};

struct RationalRing {
  using Scalar = boost::rational<long long>;
  static constexpr const char* name = "rational";
  static constexpr bool finite = false;
  static constexpr bool exact = true;
  static Scalar zero() { return 0; }
  static Scalar one() { return 1; }
  static Scalar add(Scalar a, Scalar b) { return a + b; }
  static Scalar mul(Scalar a, Scalar b) { return a * b; }
  static Scalar conj(Scalar a) { return a; }
  static double distance(Scalar a, Scalar b) { return a == b ? 0.0 : 1.0; }
  static nlohmann::json to_json(Scalar a) {
    if (a.denominator() == 1) return a.numerator();
    return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
  }
  static Scalar from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_string()) {
      auto s = j.get<std::string>();
      auto slash = s.find('/');
      try {
        if (slash == std::string::npos) return Scalar(std::stoll(s));
        return Scalar(std::stoll(s.substr(0, slash)),
                      std::stoll(s.substr(slash + 1)));
      } catch (const std::exception&) {
      }
    }
    fail(ErrorKind::ParseError,
         "rational entry must be an integer or \"p/q\", got " + j.dump());
  }
};

/// Dense row-major matrix over a semiring policy.
template <class Ring>
struct Matrix {
  using Scalar = typename Ring::Scalar;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, Ring::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring::one();
    return m;
  }

  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
      fail(ErrorKind::DimensionMismatch,
           "matrix product " + std::to_string(a.rows) + "x" +
               std::to_string(a.cols) + " by " + std::to_string(b.rows) + "x" +
               std::to_string(b.cols));
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const Scalar aik = a(i, k);
        if (aik == Ring::zero()) continue;
        for (std::size_t j = 0; j < b.cols; ++j)
          out(i, j) = Ring::add(out(i, j), Ring::mul(aik, b(k, j)));
      }
    return out;
  }

  Matrix adjoint() const {
    Matrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(j, i) = Ring::conj((*this)(i, j));
    return out;
  }

  Matrix conjugate() const {
    Matrix out = *this;
    for (auto& x : out.data) x = Ring::conj(x);
    return out;
  }

  /// Largest entrywise distance; infinity on shape mismatch.
  double distance(const Matrix& other) const {
    if (rows != other.rows || cols != other.cols) return INFINITY;
    double d = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i)
      d = std::max(d, Ring::distance(data[i], other.data[i]));
    return d;
  }

  nlohmann::json to_json() const {
    auto out = nlohmann::json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t j = 0; j < cols; ++j) row.push_back(Ring::to_json((*this)(i, j)));
      out.push_back(std::move(row));
    }
    return out;
  }

  /// Accepts a list of rows or a flat row-major list.
  static Matrix from_json(const nlohmann::json& j, std::size_t r,
                          std::size_t c) {
    Matrix m(r, c);
    if (!j.is_array())
      fail(ErrorKind::ParseError, "matrix literal must be an array");
    bool nested = j.size() == r;
    for (const auto& row : j)
      nested = nested && row.is_array() && row.size() == c;
    if (nested) {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < c; ++k) m(i, k) = Ring::from_json(j[i][k]);
      }
    } else {
      if (j.size() != r * c)
        fail(ErrorKind::TypeError, "matrix literal has " +
                                       std::to_string(j.size()) +
                                       " entries, expected " +
                                       std::to_string(r * c));
      for (std::size_t i = 0; i < r * c; ++i) m.data[i] = Ring::from_json(j[i]);
    }
    return m;
  }
};

template <class Ring>
Matrix<Ring> kron(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  Matrix<Ring> out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      const auto aij = a(i, j);
      if (aij == Ring::zero()) continue;
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          out(i * b.rows + k, j * b.cols + l) = Ring::mul(aij, b(k, l));
    }
  return out;
}

}  // namespace combs
