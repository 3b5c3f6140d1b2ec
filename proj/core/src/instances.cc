// Copyright 2026 The Authors.
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

#include "latred/instances.h"

#include <ostream>
#include <stdexcept>

#include "latred/element_set.h"
#include "latred/feature_kernel.h"
#include "latred/matrix_io.h"
#include "latred/rng.h"

namespace latred {
namespace {

constexpr struct {
  Family family;
  const char* name;
} kFamilies[] = {
    {Family::kSubsetSelection, "subset-selection"},
    {Family::kGaussianMI, "gaussian-mi"},
    {Family::kLogDet, "logdet"},
    {Family::kHalfProducts, "half-products"},
    {Family::kCut, "cut"},
    {Family::kModular, "modular"},
};

std::vector<double> UniformVector(Rng& rng, int n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.Uniform(lo, hi);
  return v;
}

SubsetSelectionSpec SubsetSelection(Rng& rng, int n) {
  SubsetSelectionSpec spec;
  spec.m = Matrix(n);
  spec.lambda = kSubsetSelectionLambda;
  for (int i = 0; i < n; ++i) {
    spec.m(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      spec.m(i, j) = spec.m(j, i) = rng.Uniform(0.0, 1.0);
    }
  }
  return spec;
}

GaussianMISpec GaussianMI(Rng& rng, int n) {
  const int m = 2 * n + 10;
  std::vector<double> z(static_cast<size_t>(n) * m);
  for (double& v : z) v = rng.Normal();
  GaussianMISpec spec;
  spec.sigma = Matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double dot = 0.0;
      for (int k = 0; k < m; ++k) {
        dot += z[static_cast<size_t>(i) * m + k] *
               z[static_cast<size_t>(j) * m + k];
      }
      spec.sigma(i, j) = spec.sigma(j, i) = dot / m;
    }
  }
  return spec;
}

LogDetSpec LogDet(Rng& rng, int n) {
  std::vector<std::vector<double>> points(n);
  for (auto& p : points) p = UniformVector(rng, kLogDetDimension, 0.0, 1.0);
  return IngestFeatures(points, kLogDetGamma);
}

HalfProductsSpec HalfProducts(Rng& rng, int n) {
  HalfProductsSpec spec;
  spec.a = UniformVector(rng, n, 0.1, 0.5);
  spec.b = UniformVector(rng, n, 0.1, 0.5);
  spec.c = UniformVector(rng, n, 1.0, 5.0);
  return spec;
}

CutSpec Cut(Rng& rng, int n) {
  CutSpec spec;
  spec.w = Matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Both draws are taken for every pair so the weights of one edge do
      // not shift the stream for the next.
      const bool present = rng.Bernoulli(kCutEdgeProbability);
      const double w = rng.Uniform(0.0, 1.0);
      if (present) spec.w(i, j) = spec.w(j, i) = w;
    }
  }
  return spec;
}

}  // namespace

const char* FamilyName(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

Family ParseFamily(const std::string& text) {
  for (const auto& f : kFamilies) {
    if (text == f.name) return f.family;
  }
  throw std::invalid_argument("unknown family '" + text + "'");
}

std::vector<Family> AllFamilies() {
  std::vector<Family> all;
  for (const auto& f : kFamilies) all.push_back(f.family);
  return all;
}

InstanceData GenerateInstanceData(Family family, int n, uint64_t seed) {
  GroundSet::Of(n);
  Rng rng(DeriveSeed(seed, {static_cast<uint64_t>(family),
                            static_cast<uint64_t>(n)}));
  InstanceData data;
  data.family = family;
  data.n = n;
  data.seed = seed;
  switch (family) {
    case Family::kSubsetSelection:
      data.params = SubsetSelection(rng, n);
      break;
    case Family::kGaussianMI:
      data.params = GaussianMI(rng, n);
      break;
    case Family::kLogDet:
      data.params = LogDet(rng, n);
      break;
    case Family::kHalfProducts:
      data.params = HalfProducts(rng, n);
      break;
    case Family::kCut:
      data.params = Cut(rng, n);
      break;
    case Family::kModular:
      data.params = ModularWeights(UniformVector(rng, n, -1.0, 1.0));
      break;
  }
  return data;
}

Oracle BuildOracle(const InstanceData& data) {
  struct Builder {
    Oracle operator()(const SubsetSelectionSpec& s) const {
      return MakeSubsetSelection(s);
    }
    Oracle operator()(const GaussianMISpec& s) const {
      return MakeGaussianMI(s);
    }
    Oracle operator()(const LogDetSpec& s) const { return MakeLogDet(s); }
    Oracle operator()(const HalfProductsSpec& s) const {
      return MakeHalfProducts(s);
    }
    Oracle operator()(const CutSpec& s) const { return MakeCut(s); }
    Oracle operator()(const ModularWeights& w) const { return MakeModular(w); }
  };
  return std::visit(Builder{}, data.params);
}

Oracle GenerateInstance(Family family, int n, uint64_t seed) {
  return BuildOracle(GenerateInstanceData(family, n, seed));
}

void WriteInstance(std::ostream& out, const InstanceData& data) {
  out << "# " << FamilyName(data.family) << " n=" << data.n
      << " seed=" << data.seed << '\n';
  struct Writer {
    std::ostream& out;
    void operator()(const SubsetSelectionSpec& s) const {
      out << "# lambda=" << s.lambda << "\n# M\n";
      WriteMatrix(out, s.m);
    }
    void operator()(const GaussianMISpec& s) const {
      out << "# sigma\n";
      WriteMatrix(out, s.sigma);
    }
    void operator()(const LogDetSpec& s) const {
      out << "# K\n";
      WriteMatrix(out, s.k);
    }
    void operator()(const HalfProductsSpec& s) const {
      out << "# a\n";
      WriteVector(out, s.a);
      out << "# b\n";
      WriteVector(out, s.b);
      out << "# c\n";
      WriteVector(out, s.c);
    }
    void operator()(const CutSpec& s) const {
      out << "# W\n";
      WriteMatrix(out, s.w);
    }
    void operator()(const ModularWeights& w) const {
      out << "# w\n";
      WriteVector(out, w.values());
    }
  };
  std::visit(Writer{out}, data.params);
}

}  // namespace latred
