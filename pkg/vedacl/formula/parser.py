import re

from .syntax import (FALSE, TRUE, And, Coop, DualCoop, Iff, Implies, Not, Or,
                     Prop)


class FormulaSyntaxError(ValueError):

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super(FormulaSyntaxError, self).__init__(
            f'line {line}, column {column}: {message}')


TOKEN_SPEC = [
    ('COMMENT', r'#[^\n]*'),
    ('NEWLINE', r'\n'),
    ('SKIP', r'[ \t\r]+'),
    ('IFF', r'<->'),
    ('IMP', r'->'),
    ('LANGLE', r'<'),
    ('RANGLE', r'>'),
    ('LBRACK', r'\['),
    ('RBRACK', r'\]'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('COMMA', r','),
    ('NOT', r'~'),
    ('AND', r'&'),
    ('OR', r'\|'),
    ('NAT', r'\d+'),
    ('IDENT', r'[a-z][A-Za-z0-9_]*'),
    ('ERROR', r'.'),
]
TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})'
                               for name, pattern in TOKEN_SPEC))


class Token:
    __slots__ = ('kind', 'text', 'line', 'column')

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f'Token({self.kind}, {self.text!r}, {self.line}:{self.column})'


def tokenize(text):
    tokens = []
    line, line_start = 1, 0
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        column = match.start() - line_start + 1
        if kind == 'NEWLINE':
            line += 1
            line_start = match.end()
        elif kind in ('SKIP', 'COMMENT'):
            continue
        elif kind == 'ERROR':
            raise FormulaSyntaxError(f'unexpected character {match.group()!r}',
                                     line, column)
        else:
            tokens.append(Token(kind, match.group(), line, column))
    tokens.append(Token('EOF', '', line, len(text) - line_start + 1))
    return tokens


class Parser:
    """Recursive descent over the formula grammar.

    Binding from loosest to tightest: ``<->`` (left associative), ``->``
    (right associative), ``|``, ``&`` and the unary operators ``~``,
    ``<A>`` and ``[A]``.
    """

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos]

    def _error(self, message, token=None):
        token = token or self._peek()
        return FormulaSyntaxError(message, token.line, token.column)

    def _consume(self, kind):
        token = self._peek()
        if token.kind != kind:
            found = token.text or 'end of input'
            raise self._error(f'expected {kind.lower()}, found {found!r}')
        self.pos += 1
        return token

    def _accept(self, kind):
        if self._peek().kind == kind:
            self.pos += 1
            return True
        return False

    def parse(self):
        if self._peek().kind == 'EOF':
            raise self._error('empty input')
        formula = self._iff()
        token = self._peek()
        if token.kind != 'EOF':
            raise self._error(f'unexpected {token.text!r}')
        return formula

    def _iff(self):
        left = self._imp()
        while self._accept('IFF'):
            left = Iff(left, self._imp())
        return left

    def _imp(self):
        left = self._or()
        if self._accept('IMP'):
            return Implies(left, self._imp())
        return left

    def _or(self):
        left = self._and()
        while self._accept('OR'):
            left = Or(left, self._and())
        return left

    def _and(self):
        left = self._unary()
        while self._accept('AND'):
            left = And(left, self._unary())
        return left

    def _agents(self, closing):
        agents = []
        if self._peek().kind != closing:
            agents.append(self._agent())
            while self._accept('COMMA'):
                agents.append(self._agent())
        self._consume(closing)
        return frozenset(agents)

    def _agent(self):
        token = self._consume('NAT')
        agent = int(token.text)
        if agent < 1:
            raise self._error('agent ids start at 1', token)
        return agent

    def _unary(self):
        token = self._peek()
        if self._accept('NOT'):
            return Not(self._unary())
        if self._accept('LANGLE'):
            coalition = self._agents('RANGLE')
            return Coop(coalition, self._unary())
        if self._accept('LBRACK'):
            coalition = self._agents('RBRACK')
            return DualCoop(coalition, self._unary())
        if self._accept('LPAREN'):
            formula = self._iff()
            self._consume('RPAREN')
            return formula
        if self._accept('IDENT'):
            if token.text == 'true':
                return TRUE
            if token.text == 'false':
                return FALSE
            return Prop(token.text)
        found = token.text or 'end of input'
        raise self._error(f'unexpected {found!r}')


def parse(text):
    """Parse ``text`` into a :class:`Formula`.

    Raises:
        FormulaSyntaxError: on malformed input, carrying line and column.
    """
    return Parser(text).parse()
