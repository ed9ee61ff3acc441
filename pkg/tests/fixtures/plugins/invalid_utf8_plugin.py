# tests/fixtures/plugins/invalid_utf8_plugin.py
"""Plugin défectueux : des octets non UTF-8 à la place des réels."""

import sys

header = sys.stdin.readline().split()
count = int(header[1])
sys.stdin.read()
sys.stdout.buffer.write(b"\xff\xfe\n" * count)
