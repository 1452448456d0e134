import logging

from influencerank.errors import UnparsableLine, EmptyInput

logger = logging.getLogger(__name__)


class Parser:
    """Line-oriented reader for one input format.

    Subclasses turn a single record line into a record (``parse_line``) and
    assemble the records into the final structure (``assemble``). Blank lines
    and ``#`` comment lines are ignored. In strict mode the first bad line
    raises; in lenient mode bad lines are skipped and tallied.
    """

    def __init__(self, strict=True):
        self.strict = strict

    @staticmethod
    def name():
        raise NotImplementedError

    def test(self, line):
        """Checks if a record line looks like this format"""
        try:
            self.parse_line(line)
            return True
        except UnparsableLine:
            return False

    def parse_line(self, line):
        raise NotImplementedError

    def assemble(self, records, skipped_lines):
        raise NotImplementedError

    def parse(self, stream):
        records = []
        skipped = 0
        for line_number, raw in enumerate(stream, start=1):
            try:
                text = decode_line(raw)
                if text is None:
                    continue

                records.append(self.parse_line(text))
            except UnparsableLine as e:
                if e.line_number is None:
                    e = type(e)(line_number, e.text, e.reason)
                if self.strict:
                    raise e

                skipped += 1
                logger.debug('skipping %s', e)

        if skipped:
            logger.warning('%s: skipped %d malformed lines', self.name(), skipped)

        if not records:
            raise EmptyInput(f'{self.name()}: no records in input')

        return self.assemble(records, skipped)


def decode_line(raw):
    """Returns the record text, or None for blank and comment lines."""
    if isinstance(raw, bytes):
        try:
            raw = raw.decode('utf-8')
        except UnicodeDecodeError:
            raise bad_line(raw, 'not valid UTF-8')

    text = raw.rstrip('\r\n')
    if not text.strip() or text.startswith('#'):
        return None

    return text


def bad_line(text, reason):
    return UnparsableLine(None, text, reason)
