// Copyright 2026 The linbicat Authors.
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

#include "linbicat/law_registry.hpp"

#include <array>

namespace linbicat {

namespace {

constexpr std::array kLaws = {
    // Quantale / quantaloid axioms for the tensor structure.
    LawInfo{"tensor.assoc", "quantaloid", "(f*g)*h = f*(g*h)"},
    LawInfo{"tensor.unit.left", "quantaloid", "T_a * f = f"},
    LawInfo{"tensor.unit.right", "quantaloid", "f * T_b = f"},
    LawInfo{"tensor.join.left", "quantaloid", "(f v g)*h = (f*h) v (g*h)"},
    LawInfo{"tensor.join.right", "quantaloid", "f*(g v h) = (f*g) v (f*h)"},
    LawInfo{"tensor.bottom.left", "quantaloid", "0 * f = 0"},
    LawInfo{"tensor.bottom.right", "quantaloid", "f * 0 = 0"},
    LawInfo{"tensor.monotone.left", "quantaloid", "f*h <= (f v g)*h"},
    LawInfo{"tensor.monotone.right", "quantaloid", "f*g <= f*(g v h)"},
    // The par structure is a quantaloid on the opposite order.
    LawInfo{"par.assoc", "co-quantaloid", "(f+g)+h = f+(g+h)"},
    LawInfo{"par.unit.left", "co-quantaloid", "B_a + f = f"},
    LawInfo{"par.unit.right", "co-quantaloid", "f + B_b = f"},
    LawInfo{"par.meet.left", "co-quantaloid", "(f ^ g)+h = (f+h) ^ (g+h)"},
    LawInfo{"par.meet.right", "co-quantaloid", "f+(g ^ h) = (f+g) ^ (f+h)"},
    LawInfo{"par.top.left", "co-quantaloid", "1 + f = 1"},
    LawInfo{"par.top.right", "co-quantaloid", "f + 1 = 1"},
    LawInfo{"par.monotone.left", "co-quantaloid", "(f ^ g)+h <= f+h"},
    LawInfo{"par.monotone.right", "co-quantaloid", "f+(g ^ h) <= f+g"},
    // Linear quantaloid / LD-quantale.
    LawInfo{"dist.left", "linear-quantaloid", "f*(g+h) <= (f*g)+h"},
    LawInfo{"dist.right", "linear-quantaloid", "(f+g)*h <= f+(g*h)"},
    // Cyclic dualizing element / family.
    LawInfo{"girard.cyclic", "girard", "f -o d_a = d_b o- f"},
    LawInfo{"girard.dualizing", "girard", "f^perp^perp = f"},
    // Enriched categories and bimodules.
    LawInfo{"qcat.unit", "qcat", "T_rho(x) <= M(x,x)"},
    LawInfo{"qcat.composition", "qcat", "M(x,x')*M(x',x'') <= M(x,x'')"},
    LawInfo{"qbim.target_action", "qbim", "Th(x,y)*N(y,y') <= Th(x,y')"},
    LawInfo{"qbim.source_action", "qbim", "M(x,x')*Th(x',y) <= Th(x,y)"},
    // Linear enriched categories.
    LawInfo{"lqcat.tensor.unit", "linear-qcat", "T_rho(x) <= Mt(x,x)"},
    LawInfo{"lqcat.tensor.composition", "linear-qcat", "Mt(x,x')*Mt(x',x'') <= Mt(x,x'')"},
    LawInfo{"lqcat.par.counit", "linear-qcat", "Mp(x,x) <= B_rho(x)"},
    LawInfo{"lqcat.par.cocomposition", "linear-qcat", "Mp(x,x'') <= Mp(x,x')+Mp(x',x'')"},
    LawInfo{"lqcat.mixed.par_tensor", "linear-qcat", "Mt(x,x'') <= Mp(x,x')+Mt(x',x'')"},
    LawInfo{"lqcat.mixed.tensor_par", "linear-qcat", "Mt(x,x'') <= Mt(x,x')+Mp(x',x'')"},
    LawInfo{"lqcat.mixed.act_right", "linear-qcat", "Mt(x,x')*Mp(x',x'') <= Mp(x,x'')"},
    LawInfo{"lqcat.mixed.act_left", "linear-qcat", "Mp(x,x')*Mt(x',x'') <= Mp(x,x'')"},
    // Linear bimodules.
    LawInfo{"lqbim.tensor.target_action", "linear-qbim", "Tt(x,y)*Nt(y,y') <= Tt(x,y')"},
    LawInfo{"lqbim.tensor.source_action", "linear-qbim", "Mt(x,x')*Tt(x',y) <= Tt(x,y)"},
    LawInfo{"lqbim.tensor.source_coaction", "linear-qbim", "Tt(x,y) <= Mp(x,x')+Tt(x',y)"},
    LawInfo{"lqbim.tensor.target_coaction", "linear-qbim", "Tt(x,y) <= Tt(x,y')+Np(y',y)"},
    LawInfo{"lqbim.par.target_coaction", "linear-qbim", "Tp(y,x) <= Np(y,y')+Tp(y',x)"},
    LawInfo{"lqbim.par.source_coaction", "linear-qbim", "Tp(y,x) <= Tp(y,x')+Mp(x',x)"},
    LawInfo{"lqbim.par.target_action", "linear-qbim", "Nt(y,y')*Tp(y',x) <= Tp(y,x)"},
    LawInfo{"lqbim.par.source_action", "linear-qbim", "Tp(y,x')*Mt(x',x) <= Tp(y,x)"},
    // Monads and monad bimodules in a quantaloid.
    LawInfo{"monad.unit", "monad", "T_a <= m"},
    LawInfo{"monad.multiplication", "monad", "m*m <= m"},
    LawInfo{"monbim.left_action", "monad", "m*f <= f"},
    LawInfo{"monbim.right_action", "monad", "f*n <= f"},
    // Linear monads and their bimodules.
    LawInfo{"lmonad.tensor.unit", "linear-monad", "T_a <= mt"},
    LawInfo{"lmonad.tensor.multiplication", "linear-monad", "mt*mt <= mt"},
    LawInfo{"lmonad.par.counit", "linear-monad", "mp <= B_a"},
    LawInfo{"lmonad.par.comultiplication", "linear-monad", "mp <= mp+mp"},
    LawInfo{"lmonad.mixed.par_tensor", "linear-monad", "mt <= mp+mt"},
    LawInfo{"lmonad.mixed.tensor_par", "linear-monad", "mt <= mt+mp"},
    LawInfo{"lmonad.mixed.act_right", "linear-monad", "mt*mp <= mp"},
    LawInfo{"lmonad.mixed.act_left", "linear-monad", "mp*mt <= mp"},
    LawInfo{"lmonbim.tensor.right_action", "linear-monad-bimodule", "ft*nt <= ft"},
    LawInfo{"lmonbim.tensor.left_action", "linear-monad-bimodule", "mt*ft <= ft"},
    LawInfo{"lmonbim.tensor.left_coaction", "linear-monad-bimodule", "ft <= mp+ft"},
    LawInfo{"lmonbim.tensor.right_coaction", "linear-monad-bimodule", "ft <= ft+np"},
    LawInfo{"lmonbim.par.left_coaction", "linear-monad-bimodule", "fp <= np+fp"},
    LawInfo{"lmonbim.par.right_coaction", "linear-monad-bimodule", "fp <= fp+mp"},
    LawInfo{"lmonbim.par.left_action", "linear-monad-bimodule", "nt*fp <= fp"},
    LawInfo{"lmonbim.par.right_action", "linear-monad-bimodule", "fp*mt <= fp"},
    // Linear adjunction 2-cells.
    LawInfo{"linadj.unit", "linear-adjunction", "T_X <= A+B"},
    LawInfo{"linadj.counit", "linear-adjunction", "B*A <= B_Y"},
    LawInfo{"closed.adjoint_exists", "linear-adjunction", "every 1-cell has a linear adjoint"},
    // Second enrichment of a category over a Girard quantaloid.
    LawInfo{"gqcat.second.counit", "girard-qcat", "M(x,x)^p <= B_rho(x)"},
    LawInfo{"gqcat.second.cocomposition", "girard-qcat", "M(x,x'')^p <= M(x',x'')^p + M(x,x')^p"},
    LawInfo{"gqcat.second.action_right", "girard-qcat", "M(x',x)^p * M(x',x'') <= M(x'',x)^p"},
    LawInfo{"gqcat.second.coaction_right", "girard-qcat", "M(x'',x) <= M(x',x'')^p + M(x',x)"},
    LawInfo{"gqcat.second.action_left", "girard-qcat", "M(x'',x) * M(x',x)^p <= M(x',x'')^p"},
    LawInfo{"gqcat.second.coaction_left", "girard-qcat", "M(x'',x) <= M(x'',x') + M(x,x')^p"},
    LawInfo{"gqbim.second.target_coaction", "girard-qbim", "Th(x,y')^p <= N(y,y')^p + Th(x,y)^p"},
    LawInfo{"gqbim.second.source_coaction", "girard-qbim", "Th(x,y)^p <= Th(x',y)^p + M(x,x')^p"},
    LawInfo{"gqbim.second.source_action", "girard-qbim", "Th(x,y)^p * M(x,x') <= Th(x',y)^p"},
    LawInfo{"gqbim.second.source_action_dual", "girard-qbim", "Th(x',y) <= M(x,x')^p + Th(x,y)"},
    LawInfo{"gqbim.second.target_action", "girard-qbim", "N(y,y')*Th(x,y')^p <= Th(x,y)^p"},
    LawInfo{"gqbim.second.target_action_dual", "girard-qbim", "Th(x,y) <= Th(x,y') + N(y,y')^p"},
    // Theorem drivers and oracle comparisons.
    LawInfo{"theorem.base", "theorem", "the base structure passes its law suite"},
    LawInfo{"theorem.lifted", "theorem", "the constructed structure passes its law suite"},
    LawInfo{"theorem.forward", "theorem", "base passes => lifted passes"},
    LawInfo{"theorem.backward", "theorem", "lifted passes => base passes (via embedding)"},
    LawInfo{"oracle.agreement", "oracle", "implementation equals independent oracle"},
};

}  // namespace

std::span<const LawInfo> law_registry() { return kLaws; }

const LawInfo* find_law(std::string_view id) {
  if (auto colon = id.rfind(':'); colon != std::string_view::npos) id = id.substr(colon + 1);
  for (const auto& law : kLaws)
    if (law.id == id) return &law;
  return nullptr;
}

}  // namespace linbicat
