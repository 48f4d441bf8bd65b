// Copyright 2026 The ttisched Authors
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

#ifndef STCA_TYPES_HPP_
#define STCA_TYPES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace stca {

using RateMatrix = Eigen::MatrixXd;        // bits per time unit, channels x services
using ValidityMatrix = Eigen::MatrixXi;    // time units, channels x services
using AssignmentMatrix = Eigen::MatrixXi;  // {0,1}, channels x services
using Vector = Eigen::VectorXd;

/// Residual demands at or below this value count as fully served. Instances
/// built from integer data never get near it; it only absorbs float dust
/// accumulated over long simulation runs.
inline constexpr double kCompletionTolerance = 1e-9;

enum class ServiceClass { Mcc, Mbb };

std::string to_string(ServiceClass c);
bool service_class_from_string(const std::string& s, ServiceClass* out);

/// One active service: what is left to send and how long it may still take.
/// The scheduling weight is always derived as 1/deadline, never stored.
struct ServiceState {
  std::int64_t id = 0;
  double demand = 0.0;    // bits remaining
  int deadline = 0;       // time units remaining before expiry
  ServiceClass service_class = ServiceClass::Mcc;
  std::int64_t arrival_time = 0;
};

/// Urgency weight of a service before the current TTI.
inline double service_weight(const ServiceState& s) {
  return 1.0 / static_cast<double>(s.deadline);
}

/// Channel state for one (channel, service) pair: a rate sustainable without
/// error for a bounded number of time units.
struct ChannelCsi {
  double rate = 0.0;   // bits per time unit
  int valid_for = 1;   // time units the rate holds
};

/// Dense per-(channel, service) channel state. Rates and validity horizons
/// are stored as parallel matrices so solvers can work on whole columns.
struct CsiMatrix {
  RateMatrix rate;            // channels x services
  ValidityMatrix valid_for;   // channels x services

  Eigen::Index channels() const { return rate.rows(); }
  Eigen::Index services() const { return rate.cols(); }

  ChannelCsi at(Eigen::Index channel, Eigen::Index service) const {
    return ChannelCsi{rate(channel, service), valid_for(channel, service)};
  }

  static CsiMatrix Zero(Eigen::Index channels, Eigen::Index services) {
    CsiMatrix m;
    m.rate = RateMatrix::Zero(channels, services);
    m.valid_for = ValidityMatrix::Ones(channels, services);
    return m;
  }
};

/// One scheduling snapshot: the active services, the full CSI matrix and the
/// admissible TTI lengths. Services are ordered; solvers index them by
/// position and break ties by id.
struct Instance {
  std::vector<ServiceState> services;
  CsiMatrix csi;                 // channels x |services|
  std::vector<int> tti_menu;     // admissible TTI lengths, sorted ascending
  double signaling_overhead = 0.0;  // time units spent on control signaling

  Eigen::Index num_channels() const { return csi.channels(); }
  Eigen::Index num_services() const {
    return static_cast<Eigen::Index>(services.size());
  }
};

/// Completion bonus scale: with M = |S|-1 a single completion outweighs the
/// largest possible sum of the other services' utility terms.
inline double completion_bonus(const Instance& instance) {
  return static_cast<double>(instance.num_services()) - 1.0;
}

/// Throws std::invalid_argument if the snapshot violates its structural
/// invariants (shape mismatch, empty menu, unsorted menu, overhead not below
/// the smallest TTI, nonpositive demands or deadlines, negative rates).
void check_instance(const Instance& instance);

/// A chosen TTI length together with the binary channel-to-service map.
struct ScheduleDecision {
  int tti_length = 1;
  AssignmentMatrix assignment;  // channels x |services|, entries in {0,1}

  static ScheduleDecision AllZero(const Instance& instance) {
    ScheduleDecision d;
    d.tti_length = instance.tti_menu.empty() ? 1 : instance.tti_menu.front();
    d.assignment = AssignmentMatrix::Zero(instance.num_channels(),
                                          instance.num_services());
    return d;
  }
};

/// Result of applying one TTI to an instance. Every input service lands in
/// exactly one of updated/completed/dropped; served_bits is aligned with the
/// input service order.
struct TransitionOutcome {
  std::vector<ServiceState> updated;
  std::vector<std::int64_t> completed;
  std::vector<std::int64_t> dropped;
  Vector served_bits;
};

}  // namespace stca

#endif  // STCA_TYPES_HPP_
