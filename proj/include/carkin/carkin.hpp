// Copyright 2026 The carkin Authors
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

#ifndef CARKIN_CARKIN_HPP_
#define CARKIN_CARKIN_HPP_

#include "carkin/bundle.hpp"
#include "carkin/connection.hpp"
#include "carkin/group_e2.hpp"
#include "carkin/heading_field.hpp"
#include "carkin/maneuvers.hpp"
#include "carkin/numerics.hpp"
#include "carkin/transport.hpp"

#endif  // CARKIN_CARKIN_HPP_
