// Copyright 2026 The Hintforge Authors
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

#include "common.hpp"

namespace hintforge::gen {

Planted ringTemplate(const FamilyContext& ctx);
Planted overlappingPalette(const FamilyContext& ctx);
Planted separatorTrap(const FamilyContext& ctx);

Planted communityParity(const FamilyContext& ctx);
Planted lastClauseSignal(const FamilyContext& ctx);
Planted latentBackdoor(const FamilyContext& ctx);
Planted hornBackdoor(const FamilyContext& ctx);

Planted cliquePath(const FamilyContext& ctx);
Planted coreFringe(const FamilyContext& ctx);
Planted motifBridge(const FamilyContext& ctx);

Planted gatewayHub(const FamilyContext& ctx);
Planted geometricAnchor(const FamilyContext& ctx);
Planted starKernel(const FamilyContext& ctx);

Planted blockCoupled(const FamilyContext& ctx);
Planted activeResource(const FamilyContext& ctx);
Planted singleBottleneck(const FamilyContext& ctx);

Planted decoyComplement(const FamilyContext& ctx);
Planted latentClass(const FamilyContext& ctx);
Planted singleResource(const FamilyContext& ctx);

Planted clusteredEuclidean(const FamilyContext& ctx);
Planted latentMetric(const FamilyContext& ctx);
Planted pairedRibbon(const FamilyContext& ctx);

}  // namespace hintforge::gen
