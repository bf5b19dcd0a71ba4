#ifndef SIMBA_CLI_APP_HPP
#define SIMBA_CLI_APP_HPP

namespace simba::cli {

// Exit codes: 0 success, 1 acceptance/calibration drift, 2 config or usage
// error, 3 oracle/simc divergence.
constexpr int kExitOk = 0;
constexpr int kExitDrift = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

int run(int argc, char** argv);

}  // namespace simba::cli

#endif  // SIMBA_CLI_APP_HPP
