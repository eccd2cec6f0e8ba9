// Copyright 2026 The k8s-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "k8s_atlas/builtin_config.hpp"
#include "k8s_atlas/cluster.hpp"
#include "k8s_atlas/config.hpp"
#include "k8s_atlas/diagnostics.hpp"
#include "k8s_atlas/dot.hpp"
#include "k8s_atlas/errors.hpp"
#include "k8s_atlas/graph.hpp"
#include "k8s_atlas/node_ref.hpp"
#include "k8s_atlas/ingest.hpp"
#include "k8s_atlas/pipeline.hpp"
#include "k8s_atlas/process.hpp"
#include "k8s_atlas/render.hpp"
#include "k8s_atlas/resource.hpp"
#include "k8s_atlas/selector.hpp"
