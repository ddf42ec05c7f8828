// Copyright 2026 The qtherm Authors
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

#include "qtherm/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

constexpr double kBranchFloor = 1e-14;
constexpr double kValidationTolerance = 1e-10;
constexpr double kPsdTolerance = -1e-8;

// rho -> M rho (M acting on target bits of the row index), for any 2x2 or
// 4x4 matrix, not necessarily unitary.
void left_apply(std::vector<cdouble>& data, int dim,
                const std::vector<cdouble>& m, const std::vector<int>& targets) {
  if (targets.size() == 1) {
    const int mask = 1 << targets[0];
    for (int r = 0; r < dim; ++r) {
      if (r & mask) continue;
      for (int c = 0; c < dim; ++c) {
        const cdouble a0 = data[r * dim + c];
        const cdouble a1 = data[(r | mask) * dim + c];
        data[r * dim + c] = m[0] * a0 + m[1] * a1;
        data[(r | mask) * dim + c] = m[2] * a0 + m[3] * a1;
      }
    }
    return;
  }
  const int mask0 = 1 << targets[0];
  const int mask1 = 1 << targets[1];
  for (int r = 0; r < dim; ++r) {
    if (r & (mask0 | mask1)) continue;
    const int rows[4] = {r, r | mask0, r | mask1, r | mask0 | mask1};
    for (int c = 0; c < dim; ++c) {
      cdouble in[4];
      for (int k = 0; k < 4; ++k) in[k] = data[rows[k] * dim + c];
      for (int k = 0; k < 4; ++k) {
        cdouble acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += m[k * 4 + j] * in[j];
        data[rows[k] * dim + c] = acc;
      }
    }
  }
}

// rho -> rho M^dag (acting on target bits of the column index).
void right_apply_dagger(std::vector<cdouble>& data, int dim,
                        const std::vector<cdouble>& m,
                        const std::vector<int>& targets) {
  // (rho M^dag)[r][c] = sum_k rho[r][k] conj(M[c][k]).
  if (targets.size() == 1) {
    const int mask = 1 << targets[0];
    const cdouble m00 = std::conj(m[0]), m01 = std::conj(m[1]);
    const cdouble m10 = std::conj(m[2]), m11 = std::conj(m[3]);
    for (int c = 0; c < dim; ++c) {
      if (c & mask) continue;
      for (int r = 0; r < dim; ++r) {
        const cdouble a0 = data[r * dim + c];
        const cdouble a1 = data[r * dim + (c | mask)];
        data[r * dim + c] = a0 * m00 + a1 * m01;
        data[r * dim + (c | mask)] = a0 * m10 + a1 * m11;
      }
    }
    return;
  }
  const int mask0 = 1 << targets[0];
  const int mask1 = 1 << targets[1];
  for (int c = 0; c < dim; ++c) {
    if (c & (mask0 | mask1)) continue;
    const int cols[4] = {c, c | mask0, c | mask1, c | mask0 | mask1};
    for (int r = 0; r < dim; ++r) {
      cdouble in[4];
      for (int k = 0; k < 4; ++k) in[k] = data[r * dim + cols[k]];
      for (int k = 0; k < 4; ++k) {
        cdouble acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += in[j] * std::conj(m[k * 4 + j]);
        data[r * dim + cols[k]] = acc;
      }
    }
  }
}

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 8) {
    throw std::invalid_argument("qubit count must be in [1, 8]");
  }
  dim_ = 1 << num_qubits;
  data_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
  data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix rho(psi.num_qubits());
  const int d = rho.dim_;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      rho.data_[r * d + c] = psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
  }
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int num_qubits,
                                         std::vector<cdouble> data) {
  DensityMatrix rho(num_qubits);
  const int d = rho.dim_;
  if (data.size() != static_cast<size_t>(d) * d) {
    throw std::invalid_argument("density matrix size does not match qubits");
  }
  double trace = 0.0;
  double hermiticity = 0.0;
  for (int r = 0; r < d; ++r) {
    trace += data[r * d + r].real();
    for (int c = 0; c < d; ++c) {
      hermiticity = std::max(
          hermiticity, std::abs(data[r * d + c] - std::conj(data[c * d + r])));
    }
  }
  if (hermiticity > kValidationTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(trace - 1.0) > kValidationTolerance) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  if (min_eigenvalue_hermitian(data, d) < kPsdTolerance) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  rho.data_ = std::move(data);
  return rho;
}

void DensityMatrix::apply(const Gate& g) {
  for (int t : g.targets) {
    if (t < 0 || t >= num_qubits_) {
      throw std::invalid_argument("gate target out of range");
    }
  }
  left_apply(data_, dim_, g.matrix, g.targets);
  right_apply_dagger(data_, dim_, g.matrix, g.targets);
}

double DensityMatrix::probability_of_bit(int target, int bit) const {
  if (target < 0 || target >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const int mask = 1 << target;
  const int want = bit ? mask : 0;
  double p = 0.0;
  for (int i = 0; i < dim_; ++i) {
    if ((i & mask) == want) p += data_[i * dim_ + i].real();
  }
  return p;
}

void DensityMatrix::project_z(int target, int bit) {
  const double p = probability_of_bit(target, bit);
  if (p < kBranchFloor) {
    throw std::runtime_error("measurement branch probability below 1e-14");
  }
  const int mask = 1 << target;
  const int want = bit ? mask : 0;
  const double scale = 1.0 / p;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if ((r & mask) == want && (c & mask) == want) {
        data_[r * dim_ + c] *= scale;
      } else {
        data_[r * dim_ + c] = 0.0;
      }
    }
  }
}

void DensityMatrix::dephase_z(int target) {
  if (target < 0 || target >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const int mask = 1 << target;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if ((r & mask) != (c & mask)) data_[r * dim_ + c] = 0.0;
    }
  }
}

void DensityMatrix::apply_kraus_1q(
    const std::vector<std::vector<cdouble>>& kraus, int target) {
  if (target < 0 || target >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  std::vector<cdouble> result(data_.size(), 0.0);
  std::vector<cdouble> term;
  for (const auto& k : kraus) {
    if (k.size() != 4) {
      throw std::invalid_argument("Kraus operators must be 2x2");
    }
    term = data_;
    left_apply(term, dim_, k, {target});
    right_apply_dagger(term, dim_, k, {target});
    for (size_t i = 0; i < result.size(); ++i) result[i] += term[i];
  }
  data_ = std::move(result);
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += data_[i * dim_ + i].real();
  return t;
}

DensityMatrix DensityMatrix::reduced(const std::vector<int>& keep) const {
  if (keep.empty() || keep.size() > static_cast<size_t>(num_qubits_)) {
    throw std::invalid_argument("invalid kept-qubit list");
  }
  for (size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 0 || keep[j] >= num_qubits_ ||
        (j > 0 && keep[j] <= keep[j - 1])) {
      throw std::invalid_argument("kept qubits must be ascending and in range");
    }
  }
  std::vector<int> traced;
  for (int q = 0; q < num_qubits_; ++q) {
    bool kept = false;
    for (int k : keep) kept = kept || (k == q);
    if (!kept) traced.push_back(q);
  }
  const int kd = 1 << keep.size();
  const int td = 1 << traced.size();
  DensityMatrix out(static_cast<int>(keep.size()));
  auto compose = [&](int kept_bits, int traced_bits) {
    int full = 0;
    for (size_t j = 0; j < keep.size(); ++j) {
      full |= ((kept_bits >> j) & 1) << keep[j];
    }
    for (size_t j = 0; j < traced.size(); ++j) {
      full |= ((traced_bits >> j) & 1) << traced[j];
    }
    return full;
  };
  for (int r = 0; r < kd; ++r) {
    for (int c = 0; c < kd; ++c) {
      cdouble acc = 0.0;
      for (int e = 0; e < td; ++e) {
        acc += data_[compose(r, e) * dim_ + compose(c, e)];
      }
      out.data_[r * kd + c] = acc;
    }
  }
  return out;
}

double min_eigenvalue_hermitian(const std::vector<cdouble>& data, int dim) {
  if (dim < 1 || data.size() != static_cast<size_t>(dim) * dim) {
    throw std::invalid_argument("matrix size does not match dimension");
  }
  std::vector<cdouble> a = data;
  auto off_norm = [&]() {
    double s = 0.0;
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        if (r != c) s += std::norm(a[r * dim + c]);
      }
    }
    return std::sqrt(s);
  };
  double scale = 0.0;
  for (const cdouble& v : a) scale = std::max(scale, std::abs(v));
  const double stop = 1e-13 * std::max(scale, 1.0);
  for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const cdouble apq = a[p * dim + q];
        const double mag = std::abs(apq);
        if (mag <= stop / dim) continue;
        // Phase-rotate column q so the pivot becomes real, then apply a real
        // Jacobi rotation that zeroes it.
        const cdouble d = std::conj(apq) / mag;
        for (int i = 0; i < dim; ++i) a[i * dim + q] *= d;
        for (int j = 0; j < dim; ++j) a[q * dim + j] *= std::conj(d);
        const double app = a[p * dim + p].real();
        const double aqq = a[q * dim + q].real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < dim; ++i) {
          const cdouble vp = a[i * dim + p];
          const cdouble vq = a[i * dim + q];
          a[i * dim + p] = c * vp - s * vq;
          a[i * dim + q] = s * vp + c * vq;
        }
        for (int j = 0; j < dim; ++j) {
          const cdouble vp = a[p * dim + j];
          const cdouble vq = a[q * dim + j];
          a[p * dim + j] = c * vp - s * vq;
          a[q * dim + j] = s * vp + c * vq;
        }
      }
    }
  }
  double lowest = a[0].real();
  for (int i = 1; i < dim; ++i) {
    lowest = std::min(lowest, a[i * dim + i].real());
  }
  return lowest;
}

}  // namespace qtherm
