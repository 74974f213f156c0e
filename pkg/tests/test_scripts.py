import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("script, args, needle", [
    ("reproduce_tables.py", ["--max-d", "3", "--terms", "5"], "commutative generators (4)"),
    ("deficiency_survey.py", ["--max-d", "3", "--max-degree", "4"], "needed: 1 1 2 0"),
])
def test_script_runs(script, args, needle):
    proc = subprocess.run([sys.executable, str(SCRIPTS / script), *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert needle in proc.stdout
