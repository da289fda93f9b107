"""Line reading shared by the lexicon and corpus loaders."""
import io
import os

_BOM = "\ufeff"


def iter_lines(source, error_cls):
    """Yield ``(line_number, text)`` pairs with line endings removed.

    `source` may be a path, raw bytes, a binary or text stream, or an iterable
    of str lines.  Bytes are decoded line by line so a decode failure can name
    its line.  A leading BOM is stripped.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
        yield from _iter_bytes(data, error_cls)
        return
    if isinstance(source, (bytes, bytearray)):
        yield from _iter_bytes(bytes(source), error_cls)
        return
    if isinstance(source, (io.RawIOBase, io.BufferedIOBase)):
        yield from _iter_bytes(source.read(), error_cls)
        return
    for lineno, line in enumerate(source, 1):
        if isinstance(line, bytes):
            line = _decode(line, lineno, error_cls)
        line = line.rstrip("\n").rstrip("\r")
        if lineno == 1 and line.startswith(_BOM):
            line = line[1:]
        yield lineno, line


def _iter_bytes(data, error_cls):
    if not data:
        return
    chunks = data.split(b"\n")
    if chunks[-1] == b"":
        chunks.pop()
    for lineno, raw in enumerate(chunks, 1):
        if raw.endswith(b"\r"):
            raw = raw[:-1]
        line = _decode(raw, lineno, error_cls)
        if lineno == 1 and line.startswith(_BOM):
            line = line[1:]
        yield lineno, line


def _decode(raw, lineno, error_cls):
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise error_cls(f"line {lineno}: invalid UTF-8 ({exc.reason} at byte {exc.start})") from exc
