"""Resource monitoring for long verification sweeps."""

import time
from typing import Optional

import psutil

from chowgen.logging_config import get_logger

logger = get_logger("monitor")


class ResourceMonitor:
    """Monitor memory and CPU while sweeps run."""

    def __init__(self, min_free_memory_mb: int = 256):
        self.min_free_memory_mb = min_free_memory_mb
        self._started = time.monotonic()
        self._peak_rss_mb = 0.0

    def reset(self) -> None:
        self._started = time.monotonic()
        self._peak_rss_mb = 0.0

    def get_memory_usage(self) -> dict:
        """Get current memory usage of this process."""
        process = psutil.Process()
        mem = process.memory_info()
        rss_mb = mem.rss / (1024**2)
        self._peak_rss_mb = max(self._peak_rss_mb, rss_mb)
        return {
            "rss_mb": rss_mb,
            "vms_mb": mem.vms / (1024**2),
            "percent": process.memory_percent(),
        }

    def get_available_memory_mb(self) -> float:
        return psutil.virtual_memory().available / (1024**2)

    def check_memory(self, required_mb: Optional[int] = None) -> bool:
        """Check that enough memory is free before starting a sweep."""
        required = required_mb or self.min_free_memory_mb
        available = self.get_available_memory_mb()
        if available < required:
            raise RuntimeError(
                f"Insufficient memory: {available:.0f}MB available, {required}MB required"
            )
        return True

    def get_cpu_usage(self) -> float:
        """Get current CPU usage percentage."""
        return psutil.cpu_percent(interval=0.1)

    def worker_processes(self) -> list[int]:
        """PIDs of live child processes, e.g. sweep workers."""
        pids = []
        for child in psutil.Process().children(recursive=True):
            try:
                if child.status() != psutil.STATUS_ZOMBIE:
                    pids.append(child.pid)
            except (psutil.NoSuchProcess, psutil.AccessDenied):
                pass
        return pids

    def detect_zombies(self) -> list[int]:
        """PIDs of child processes left as zombies."""
        zombies = []
        for child in psutil.Process().children(recursive=True):
            try:
                if child.status() == psutil.STATUS_ZOMBIE:
                    zombies.append(child.pid)
            except (psutil.NoSuchProcess, psutil.AccessDenied):
                pass
        return zombies

    def summary(self) -> dict:
        memory = self.get_memory_usage()
        return {
            "elapsed_seconds": round(time.monotonic() - self._started, 3),
            "rss_mb": round(memory["rss_mb"], 1),
            "peak_rss_mb": round(self._peak_rss_mb, 1),
            "cpu_percent": self.get_cpu_usage(),
            "workers": len(self.worker_processes()),
            "zombies": len(self.detect_zombies()),
        }

    def pool_allowed(self, jobs: int) -> bool:
        """False when free memory is below min_free_memory_mb per worker."""
        try:
            self.check_memory(self.min_free_memory_mb * jobs)
        except RuntimeError as e:
            logger.warning(f"{e}; running the sweep in this process")
            return False
        return True

    def log_summary(self) -> None:
        s = self.summary()
        logger.info(
            f"Resources: {s['elapsed_seconds']}s elapsed, {s['rss_mb']}MB RSS "
            f"(peak {s['peak_rss_mb']}MB), CPU {s['cpu_percent']}%, "
            f"{s['workers']} live workers, {s['zombies']} zombie workers"
        )


monitor = ResourceMonitor()
