#include "c2j/exec.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>

namespace c2j {

namespace {

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

bool executable_at(const std::string& path) {
  struct stat st;
  if (stat(path.c_str(), &st) != 0) return false;
  if (!S_ISREG(st.st_mode)) return false;
  return access(path.c_str(), X_OK) == 0;
}

}  // namespace

bool command_exists(const std::string& cmd) {
  if (cmd.empty()) return false;
  if (cmd.find('/') != std::string::npos) return executable_at(cmd);
  const char* path_env = std::getenv("PATH");
  if (!path_env) return false;
  std::string path(path_env);
  size_t begin = 0;
  while (begin <= path.size()) {
    size_t end = path.find(':', begin);
    if (end == std::string::npos) end = path.size();
    std::string dir = path.substr(begin, end - begin);
    if (!dir.empty() && executable_at(dir + "/" + cmd)) return true;
    begin = end + 1;
  }
  return false;
}

ExecResult run_process(const std::vector<std::string>& argv,
                       const std::string& workdir, double timeout_s) {
  ExecResult result;
  if (argv.empty()) {
    result.spawn_failed = true;
    result.spawn_error = "empty argv";
    return result;
  }

  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    result.spawn_failed = true;
    result.spawn_error = std::string("pipe: ") + std::strerror(errno);
    return result;
  }

  double start = now_seconds();
  pid_t pid = fork();
  if (pid < 0) {
    result.spawn_failed = true;
    result.spawn_error = std::string("fork: ") + std::strerror(errno);
    for (int fd : {out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
      close(fd);
    return result;
  }

  if (pid == 0) {
    // child: own process group so a timeout can kill helpers too
    setpgid(0, 0);
    if (!workdir.empty() && chdir(workdir.c_str()) != 0) _exit(127);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    for (int fd : {out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
      close(fd);
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);

    std::vector<char*> cargv;
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);
    execvp(cargv[0], cargv.data());
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);
  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
  fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

  bool out_open = true, err_open = true;
  char buf[8192];
  while (out_open || err_open) {
    double elapsed = now_seconds() - start;
    if (timeout_s > 0 && elapsed > timeout_s) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      break;
    }
    struct pollfd fds[2];
    int nfds = 0;
    if (out_open) fds[nfds++] = {out_pipe[0], POLLIN, 0};
    if (err_open) fds[nfds++] = {err_pipe[0], POLLIN, 0};
    double remain = timeout_s > 0 ? timeout_s - elapsed : 0.1;
    int wait_ms = static_cast<int>(remain * 1000);
    if (wait_ms < 1) wait_ms = 1;
    if (wait_ms > 200) wait_ms = 200;
    int rc = poll(fds, nfds, wait_ms);
    if (rc < 0 && errno != EINTR) break;
    for (int i = 0; i < nfds; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP))) continue;
      bool is_out = fds[i].fd == out_pipe[0];
      ssize_t n;
      while ((n = read(fds[i].fd, buf, sizeof buf)) > 0) {
        if (is_out)
          result.stdout_bytes.append(buf, static_cast<size_t>(n));
        else
          result.stderr_text.append(buf, static_cast<size_t>(n));
      }
      if (n == 0) {
        if (is_out)
          out_open = false;
        else
          err_open = false;
        close(fds[i].fd);
      }
    }
  }
  if (out_open) close(out_pipe[0]);
  if (err_open) close(err_pipe[0]);

  int status = 0;
  pid_t waited;
  do {
    waited = waitpid(pid, &status, 0);
  } while (waited < 0 && errno == EINTR);

  result.duration_s = now_seconds() - start;
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
    if (result.exit_code == 127 && result.stdout_bytes.empty() &&
        result.stderr_text.empty() && !result.timed_out) {
      result.spawn_failed = true;
      result.spawn_error = "cannot execute " + argv[0];
    }
  } else if (WIFSIGNALED(status)) {
    result.signaled = true;
    result.term_signal = WTERMSIG(status);
    result.exit_code = 128 + result.term_signal;
  }
  return result;
}

}  // namespace c2j
