// Copyright 2026 The privlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVLEARN_PRIVLEARN_HPP_
#define PRIVLEARN_PRIVLEARN_HPP_

#include "privlearn/audit.hpp"
#include "privlearn/bounds.hpp"
#include "privlearn/concepts.hpp"
#include "privlearn/data.hpp"
#include "privlearn/experiment.hpp"
#include "privlearn/mechanisms.hpp"
#include "privlearn/metrics.hpp"
#include "privlearn/prediction.hpp"
#include "privlearn/random.hpp"
#include "privlearn/rational.hpp"
#include "privlearn/serialize.hpp"
#include "privlearn/synth.hpp"
#include "privlearn/transform.hpp"

#endif  // PRIVLEARN_PRIVLEARN_HPP_
