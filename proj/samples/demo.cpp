// Copyright 2026 The chowform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Walks through the library on the multiview variety of three cameras:
// which codimension profiles give a Chow form that determines X, the
// degrees of that form, and the trifocal tensor itself.

#include <iostream>

#include "chowform/chowform.hpp"

int main() {
  using namespace chowform;

  const Multidegree md = multiview_multidegree(3);
  const RankFunction delta = md.projection_dims();
  std::cout << "multidegree terms: " << md.coefficients().size() << "\n";

  for (const BetaVector& beta : enumerate_beta(md.signature(), delta, Criterion::determining)) {
    const ChowDegree d = chow_form_multidegree(md, beta);
    std::cout << "beta (" << beta[0] << "," << beta[1] << "," << beta[2] << ") degree (";
    for (std::size_t i = 0; i < d.degrees.size(); ++i) std::cout << (i ? "," : "") << d.degrees[i];
    std::cout << ")\n";
  }

  Rng rng = trial_rng(2026, 0);
  const CameraConfiguration config = random_generic_configuration(3, rng);
  const MultifocalTensor t = multifocal_tensor(config, BetaVector{{2, 1, 1}});

  // A world point, its image in camera 1, and random lines through its
  // images in cameras 2 and 3: the contraction vanishes.
  const Vec q{1, 2, 3, 1};
  Vec line2 = cross<Rational>(project_point(config.camera(1), q), Vec{1, 0, 0});
  Vec line3 = cross<Rational>(project_point(config.camera(2), q), Vec{0, 1, 0});
  const std::vector<Vec> slots{project_point(config.camera(0), q), line2, line3};
  std::cout << "contraction at an incident triple: " << to_string(tensor_contract(t, slots)) << "\n";
  return 0;
}
