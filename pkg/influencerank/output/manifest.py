import hashlib

from influencerank import __version__

TOOL = 'influencerank'


class Manifest:
    """Provenance header written at the top of every artifact.

    Rendered as ``#manifest``, ``#input`` and ``#param`` comment lines with
    keys sorted, so identical runs produce identical headers.
    """

    def __init__(self, command, inputs=None, params=None, version=__version__):
        self.command = command
        self.inputs = dict(inputs or {})
        self.params = {key: str(value) for key, value in (params or {}).items()}
        self.version = version

    def lines(self):
        lines = [f'#manifest tool={TOOL} version={self.version} command={self.command}']
        lines += [f'#input {name}={digest}' for name, digest in sorted(self.inputs.items())]
        lines += [f'#param {key}={value}' for key, value in sorted(self.params.items())]
        return lines

    @classmethod
    def parse(cls, lines):
        header = None
        inputs = {}
        params = {}
        for line in lines:
            if isinstance(line, bytes):
                line = line.decode('utf-8')
            line = line.rstrip('\r\n')
            if not line.startswith('#'):
                break

            kind, _, rest = line[1:].partition(' ')
            if kind == 'manifest':
                header = dict(field.split('=', 1) for field in rest.split(' '))
            elif kind == 'input':
                name, _, digest = rest.partition('=')
                inputs[name] = digest
            elif kind == 'param':
                key, _, value = rest.partition('=')
                params[key] = value

        if header is None:
            return None

        return cls(header.get('command'), inputs, params, version=header.get('version'))

    def __eq__(self, other):
        return (isinstance(other, Manifest) and self.command == other.command and self.inputs == other.inputs
                and self.params == other.params and self.version == other.version)

    def __repr__(self):
        return f'Manifest{{command={self.command}, inputs={sorted(self.inputs)}, params={self.params}}}'


def file_digest(path):
    digest = hashlib.sha256()
    with open(path, 'rb') as file:
        for block in iter(lambda: file.read(1 << 20), b''):
            digest.update(block)
    return digest.hexdigest()
