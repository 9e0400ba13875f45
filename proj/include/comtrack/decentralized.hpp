#pragma once

#include <string>
#include <vector>

#include "comtrack/trackers.hpp"
#include "comtrack/types.hpp"

namespace comtrack {

/// Undirected, connected network of computing agents, each owning a disjoint
/// block of adjacency rows.
struct AgentTopology {
  int m = 0;                                    // agent count
  std::vector<std::vector<int>> neighbors;      // sorted adjacency lists
  std::vector<std::vector<int>> row_partition;  // disjoint cover of rows

  void validate(int n) const;
};

/// Balanced contiguous row blocks (sizes differ by at most one).
std::vector<std::vector<int>> partition_rows(int n, int m);

/// Topology CSV: header "#agents=<M>", one undirected link "i,j" per line,
/// then an optional "#partition" marker followed by "agent,row" lines; without
/// the marker the row partition is contiguous balanced.
AgentTopology load_topology(const std::string& path, int n);
void write_topology(const AgentTopology& topo, const std::string& path);

/// Ring over the agents plus two cross chords; the default simulation network.
AgentTopology ring_with_chords(int m, int n);

/// Everything one agent owns: its row block's factors and splitting copy, a
/// local copy of the shared basis, duals, and its slice of the statistics.
struct AgentState {
  Matrix u, o, p;    // rows x c
  Matrix v;          // n x c local copy of V
  Matrix gamma;      // rows x c dual for the O = P split
  Matrix pi_bar;     // n x c aggregated neighborhood dual
  Matrix s_mat;      // rows x n slice of S^t
  double s_scalar = 0;
};

/// Ascent step on both duals, with every right-hand value at round k:
/// gamma += rho (O - P);  pi_bar += (rho/2) (|nbrs| V_self - sum V_nbr).
void dual_update(AgentState& agent, const Matrix& v_self,
                 const std::vector<Matrix>& neighbor_vs, double rho);

/// Closed-form block solves, each projected onto the nonnegative orthant.
/// When unprojected is non-null it receives the raw linear-system solution.
/// A singular U system (lambda = 0 with rank-deficient V) falls back to
/// projected gradient steps; a singular V system is a configuration error.
Matrix vm_update(const AgentState& agent, const Matrix& v_self,
                 const std::vector<Matrix>& neighbor_vs, double rho,
                 double lambda, int m_total, Matrix* unprojected = nullptr);
Matrix um_update(const AgentState& agent, double lambda,
                 Matrix* unprojected = nullptr);
Matrix om_update(const AgentState& agent, double rho,
                 Matrix* unprojected = nullptr);
/// Soft-threshold solve of the splitting block: [S_{mu/rho}(O + gamma/rho)]_+.
Matrix pm_update(const AgentState& agent, double rho, double mu);

struct ConsensusDiag {
  int rounds = 0;
  double consensus_residual = 0.0;  // max_{a,b} ||V_a - V_b||_F / ||Vbar||_F
  double max_v_deviation = 0.0;     // max_a ||V_a - Vbar||_F
  long messages = 0;                // payloads delivered this interval
  double objective = 0.0;           // centralized objective of stacked state
};

struct ConsensusResult {
  TrackResult track;  // stacked U/O, averaged V
  std::vector<ConsensusDiag> per_interval;
};

/// Consensus tracker: synchronous rounds of dual update, closed-form V/U/O
/// solves and the splitting step, then V broadcast; each agent reads only its
/// own rows of the snapshots.
ConsensusResult run_decentralized(const SnapshotSeries& series,
                                  const Hyperparams& hp,
                                  const SolveOptions& opt,
                                  const AgentTopology& topo,
                                  const InitPolicy& init);

}  // namespace comtrack
